//! Translation of a monad along an adjunction.
//!
//! Given an adjunction `(F, U, unit, counit)` and a monad `T` on the
//! instance category, the composite `P = U T F` is again a monad, with
//!
//! ```text
//! unit_P = U(unit_T at F X) . unit_X
//! mult_P = U(mult_T at F X) . U(T(counit at T F X))
//! ```
//!
//! [`translate`] builds that monad as an ordinary [`MonadDescriptor`];
//! [`check_translation_diagrams`] evaluates, cell by cell, the two proof
//! diagrams behind the construction (the unit-law diagram and the
//! associativity diagram) so a failure is localized to the axiom it came
//! from; [`stack`] iterates the construction to build transformer stacks.

use std::rc::Rc;

use crate::adjunction::{Adjunction, DObject, MonadOnD};
use crate::function::FiniteFunction;
use crate::harness::{Budget, Check, LawReport};
use crate::instances::error::{lift_monad_to_coslice, make_error_adjunction};
use crate::instances::reader::{lift_monad_to_reader, make_reader_adjunction};
use crate::instances::state::{lift_monad_trivially, make_state_adjunction};
use crate::instances::writer::{lift_monad_to_mset, make_writer_adjunction};
use crate::monad::{canonical_strength, MonadDescriptor};
use crate::monoid::Monoid;
use crate::universe::{values_of, FiniteType, Value};
use crate::{Error, Result};

/// The monad `P = U T F` on the base category.
pub fn translate(adj: Rc<dyn Adjunction>, t_bar: &MonadOnD) -> Result<MonadDescriptor> {
    if t_bar.owner != adj.name() {
        return Err(Error::OwnerMismatch {
            expected: adj.name(),
            found: t_bar.owner.clone(),
        });
    }
    let name = format!("{}[{}]", adj.name(), t_bar.name);

    let lift = {
        let adj = adj.clone();
        let tb = t_bar.clone();
        move |x: &FiniteType| adj.u_obj(&tb.lift_obj(&adj.f_obj(x)))
    };
    let map = {
        let adj = adj.clone();
        let tb = t_bar.clone();
        move |f: &FiniteFunction, v: &Value| {
            adj.u_mor(&tb.map_mor(&adj.f_mor(f))).apply(v)
        }
    };
    let unit = {
        let adj = adj.clone();
        let tb = t_bar.clone();
        move |x: &FiniteType, v: &Value| {
            let fx = adj.f_obj(x);
            adj.u_mor(&tb.unit_at(&fx)).apply(&adj.unit(x).apply(v))
        }
    };
    let mult = {
        let adj = adj.clone();
        let tb = t_bar.clone();
        move |x: &FiniteType, v: &Value| {
            let fx = adj.f_obj(x);
            let tfx = tb.lift_obj(&fx);
            let peeled = adj.u_mor(&tb.map_mor(&adj.counit(&tfx))).apply(v);
            adj.u_mor(&tb.mult_at(&fx)).apply(&peeled)
        }
    };
    Ok(MonadDescriptor::new(name, lift, map, unit, mult))
}

/// Every edge of the two proof diagrams at a fixed base object, exposed as
/// composable morphisms of the base category.
struct DiagramEdges {
    /// P X.
    px: FiniteType,
    /// The unit-law diagram edges, keyed by their role.
    eta_px: FiniteFunction,            // P X -> U F P X
    u_unit_f_px: FiniteFunction,       // U F P X -> U T F P X
    u_counit_tfx: FiniteFunction,      // U F P X -> P X
    ut_counit_tfx: FiniteFunction,     // U T F P X -> U T T F X
    u_unit_tfx: FiniteFunction,        // P X -> U T T F X
    u_mult_fx: FiniteFunction,         // U T T F X -> P X
    utf_eta: FiniteFunction,           // P X -> U T F U F X
    ut_counit_fx: FiniteFunction,      // U T F U F X -> P X
    utfu_unit_fx: FiniteFunction,      // U T F U F X -> U T F P X
    ut_unit_fx: FiniteFunction,        // P X -> U T T F X
    /// The associativity diagram edges.
    ut_counit_tf_px: FiniteFunction,   // P^3 X -> U T T F P X
    u_mult_f_px: FiniteFunction,       // U T T F P X -> P^2 X
    utfut_counit_tfx: FiniteFunction,  // P^3 X -> U T F U T T F X
    utt_counit_tfx: FiniteFunction,    // U T T F P X -> U T T T F X
    ut_counit_ttfx: FiniteFunction,    // U T F U T T F X -> U T T T F X
    u_mult_tfx: FiniteFunction,        // U T T T F X -> U T T F X
    utfu_mult_fx: FiniteFunction,      // U T F U T T F X -> U T F U T F X
    ut_mult_fx: FiniteFunction,        // U T T T F X -> U T T F X
    /// Source carriers for cell-by-cell evaluation.
    ufpx: FiniteType,   // U F P X
    utfufx: FiniteType, // U T F U F X
    pppx: FiniteType,   // P^3 X
    uttfpx: FiniteType, // U T T F P X
    utfuttfx: FiniteType, // U T F U T T F X
    utttfx: FiniteType, // U T T T F X
}

fn diagram_edges(adj: &Rc<dyn Adjunction>, tb: &MonadOnD, x: &FiniteType) -> DiagramEdges {
    let fx = adj.f_obj(x);
    let tfx = tb.lift_obj(&fx);
    let ttfx = tb.lift_obj(&tfx);
    let px = adj.u_obj(&tfx);
    let f_px = adj.f_obj(&px);
    let tf_px = tb.lift_obj(&f_px);
    let ppx = adj.u_obj(&tf_px);
    let f_ppx = adj.f_obj(&ppx);
    let tf_ppx = tb.lift_obj(&f_ppx);
    let pppx = adj.u_obj(&tf_ppx);

    let ufx = adj.u_obj(&fx);
    let fufx: DObject = adj.f_obj(&ufx);
    let tfufx = tb.lift_obj(&fufx);

    DiagramEdges {
        px: px.clone(),
        eta_px: adj.unit(&px),
        u_unit_f_px: adj.u_mor(&tb.unit_at(&f_px)),
        u_counit_tfx: adj.u_mor(&adj.counit(&tfx)),
        ut_counit_tfx: adj.u_mor(&tb.map_mor(&adj.counit(&tfx))),
        u_unit_tfx: adj.u_mor(&tb.unit_at(&tfx)),
        u_mult_fx: adj.u_mor(&tb.mult_at(&fx)),
        utf_eta: adj.u_mor(&tb.map_mor(&adj.f_mor(&adj.unit(x)))),
        ut_counit_fx: adj.u_mor(&tb.map_mor(&adj.counit(&fx))),
        utfu_unit_fx: adj.u_mor(&tb.map_mor(&adj.f_mor(&adj.u_mor(&tb.unit_at(&fx))))),
        ut_unit_fx: adj.u_mor(&tb.map_mor(&tb.unit_at(&fx))),
        ut_counit_tf_px: adj.u_mor(&tb.map_mor(&adj.counit(&tf_px))),
        u_mult_f_px: adj.u_mor(&tb.mult_at(&f_px)),
        utfut_counit_tfx: adj.u_mor(&tb.map_mor(&adj.f_mor(
            &adj.u_mor(&tb.map_mor(&adj.counit(&tfx))),
        ))),
        utt_counit_tfx: adj.u_mor(&tb.map_mor(&tb.map_mor(&adj.counit(&tfx)))),
        ut_counit_ttfx: adj.u_mor(&tb.map_mor(&adj.counit(&ttfx))),
        u_mult_tfx: adj.u_mor(&tb.mult_at(&tfx)),
        utfu_mult_fx: adj.u_mor(&tb.map_mor(&adj.f_mor(&adj.u_mor(&tb.mult_at(&fx))))),
        ut_mult_fx: adj.u_mor(&tb.map_mor(&tb.mult_at(&fx))),
        ufpx: adj.u_obj(&f_px),
        utfufx: adj.u_obj(&tfufx),
        pppx,
        uttfpx: adj.u_obj(&tb.lift_obj(&tf_px)),
        utfuttfx: adj.u_obj(&tb.lift_obj(&adj.f_obj(&adj.u_obj(&ttfx)))),
        utttfx: adj.u_obj(&tb.lift_obj(&ttfx)),
    }
}

/// Evaluate every cell of the unit-law and associativity diagrams, plus
/// their exteriors, for each base object in the universe.
///
/// Cells are independent named checks, so a corrupted component is pinned
/// to the axiom whose cell breaks while the naturality cells keep passing.
pub fn check_translation_diagrams(
    adj: Rc<dyn Adjunction>,
    t_bar: &MonadOnD,
    universe: &[FiniteType],
    budget: &Budget,
) -> Result<LawReport> {
    if t_bar.owner != adj.name() {
        return Err(Error::OwnerMismatch {
            expected: adj.name(),
            found: t_bar.owner.clone(),
        });
    }
    let mut report = LawReport::new(format!("diagrams({}, {})", adj.name(), t_bar.name));

    let mut tri_right = Check::new(
        "unit-diagram/counit-unit-triangle-right",
        "translation.unit-diagram.triangle-right",
    );
    let mut tri_left = Check::new(
        "unit-diagram/counit-unit-triangle-left",
        "translation.unit-diagram.triangle-left",
    );
    let mut monad_left = Check::new(
        "unit-diagram/monad-left-identity",
        "translation.unit-diagram.left-identity",
    );
    let mut monad_right = Check::new(
        "unit-diagram/monad-right-identity",
        "translation.unit-diagram.right-identity",
    );
    let mut unit_nat = Check::new(
        "unit-diagram/unit-naturality-square",
        "translation.unit-diagram.unit-naturality",
    );
    let mut counit_nat = Check::new(
        "unit-diagram/counit-naturality-square",
        "translation.unit-diagram.counit-naturality",
    );
    let mut ext_left = Check::new(
        "unit-diagram/exterior-left-identity",
        "translation.unit-diagram.exterior-left",
    );
    let mut ext_right = Check::new(
        "unit-diagram/exterior-right-identity",
        "translation.unit-diagram.exterior-right",
    );
    let mut assoc_counit_a = Check::new(
        "assoc-diagram/counit-naturality-square-a",
        "translation.assoc-diagram.counit-naturality-a",
    );
    let mut assoc_counit_b = Check::new(
        "assoc-diagram/counit-naturality-square-b",
        "translation.assoc-diagram.counit-naturality-b",
    );
    let mut assoc_mult_nat = Check::new(
        "assoc-diagram/mult-naturality-square",
        "translation.assoc-diagram.mult-naturality",
    );
    let mut assoc_monad = Check::new(
        "assoc-diagram/monad-associativity-square",
        "translation.assoc-diagram.associativity",
    );
    let mut ext_assoc = Check::new(
        "assoc-diagram/exterior-associativity",
        "translation.assoc-diagram.exterior",
    );

    for x in universe {
        let e = diagram_edges(&adj, t_bar, x);

        // --- unit-law diagram ---
        for v in values_of(&e.px, budget) {
            // (1 -> 2 -> 4) vs identity.
            tri_right.case_eq(
                &e.u_counit_tfx.apply(&e.eta_px.apply(&v)),
                &v,
                || format!("X={x}, v={v}"),
            );
            // (1 -> 7 -> 4) vs identity.
            tri_left.case_eq(
                &e.ut_counit_fx.apply(&e.utf_eta.apply(&v)),
                &v,
                || format!("X={x}, v={v}"),
            );
            // (4 -> 5 -> 6) vs identity.
            monad_left.case_eq(
                &e.u_mult_fx.apply(&e.u_unit_tfx.apply(&v)),
                &v,
                || format!("X={x}, v={v}"),
            );
            // (4 -> 9 -> 6) vs identity.
            monad_right.case_eq(
                &e.u_mult_fx.apply(&e.ut_unit_fx.apply(&v)),
                &v,
                || format!("X={x}, v={v}"),
            );
            // Exterior: mult_P . unit_P at P X = id.
            ext_left.case_eq(
                &e.u_mult_fx.apply(
                    &e.ut_counit_tfx
                        .apply(&e.u_unit_f_px.apply(&e.eta_px.apply(&v))),
                ),
                &v,
                || format!("X={x}, v={v}"),
            );
            // Exterior: mult_P . P(unit_P at X) = id.
            ext_right.case_eq(
                &e.u_mult_fx.apply(
                    &e.ut_counit_tfx
                        .apply(&e.utfu_unit_fx.apply(&e.utf_eta.apply(&v))),
                ),
                &v,
                || format!("X={x}, v={v}"),
            );
        }
        // (2 -> 3 -> 5) vs (2 -> 4 -> 5): naturality of the lifted unit.
        for v in values_of(&e.ufpx, budget) {
            unit_nat.case_eq(
                &e.ut_counit_tfx.apply(&e.u_unit_f_px.apply(&v)),
                &e.u_unit_tfx.apply(&e.u_counit_tfx.apply(&v)),
                || format!("X={x}, v={v}"),
            );
        }
        // (7 -> 8 -> 9) vs (7 -> 4 -> 9): naturality of the counit.
        for v in values_of(&e.utfufx, budget) {
            counit_nat.case_eq(
                &e.ut_counit_tfx.apply(&e.utfu_unit_fx.apply(&v)),
                &e.ut_unit_fx.apply(&e.ut_counit_fx.apply(&v)),
                || format!("X={x}, v={v}"),
            );
        }

        // --- associativity diagram ---
        for v in values_of(&e.pppx, budget) {
            // (1 -> 2 -> 5) vs (1 -> 4 -> 5).
            assoc_counit_a.case_eq(
                &e.utt_counit_tfx.apply(&e.ut_counit_tf_px.apply(&v)),
                &e.ut_counit_ttfx.apply(&e.utfut_counit_tfx.apply(&v)),
                || format!("X={x}, v={v}"),
            );
            // Exterior: mult_P . mult_P at P X vs mult_P . P(mult_P at X).
            let lhs = e.u_mult_fx.apply(&e.ut_counit_tfx.apply(
                &e.u_mult_f_px.apply(&e.ut_counit_tf_px.apply(&v)),
            ));
            let rhs = e.u_mult_fx.apply(&e.ut_counit_tfx.apply(
                &e.utfu_mult_fx.apply(&e.utfut_counit_tfx.apply(&v)),
            ));
            ext_assoc.case_eq(&lhs, &rhs, || format!("X={x}, v={v}"));
        }
        // (2 -> 3 -> 6) vs (2 -> 5 -> 6): naturality of the multiplication.
        for v in values_of(&e.uttfpx, budget) {
            assoc_mult_nat.case_eq(
                &e.ut_counit_tfx.apply(&e.u_mult_f_px.apply(&v)),
                &e.u_mult_tfx.apply(&e.utt_counit_tfx.apply(&v)),
                || format!("X={x}, v={v}"),
            );
        }
        // (4 -> 5 -> 8) vs (4 -> 7 -> 8): naturality of the counit again.
        for v in values_of(&e.utfuttfx, budget) {
            assoc_counit_b.case_eq(
                &e.ut_mult_fx.apply(&e.ut_counit_ttfx.apply(&v)),
                &e.ut_counit_tfx.apply(&e.utfu_mult_fx.apply(&v)),
                || format!("X={x}, v={v}"),
            );
        }
        // (5 -> 6 -> 9) vs (5 -> 8 -> 9): associativity of the lifted monad.
        for v in values_of(&e.utttfx, budget) {
            assoc_monad.case_eq(
                &e.u_mult_fx.apply(&e.u_mult_tfx.apply(&v)),
                &e.u_mult_fx.apply(&e.ut_mult_fx.apply(&v)),
                || format!("X={x}, v={v}"),
            );
        }
    }

    report.push(tri_right.finish());
    report.push(tri_left.finish());
    report.push(monad_left.finish());
    report.push(monad_right.finish());
    report.push(unit_nat.finish());
    report.push(counit_nat.finish());
    report.push(ext_left.finish());
    report.push(ext_right.finish());
    report.push(assoc_counit_a.finish());
    report.push(assoc_counit_b.finish());
    report.push(assoc_mult_nat.finish());
    report.push(assoc_monad.finish());
    report.push(ext_assoc.finish());
    Ok(report)
}

/// One transformer layer of a stack, outermost first.
#[derive(Clone)]
pub enum StackLayer {
    State(FiniteType),
    Writer(Monoid),
    Reader(FiniteType),
    Error(FiniteType),
}

/// Fold the translation over a chain of layers. `layers[0]` is the
/// outermost transformer; the empty chain returns the base unchanged.
///
/// Writer and reader layers lift via the canonical strength of the monad
/// built so far; lifting errors (a violated side condition) propagate.
pub fn stack(
    layers: &[StackLayer],
    base: MonadDescriptor,
    budget: &Budget,
) -> Result<MonadDescriptor> {
    let mut monad = base;
    for layer in layers.iter().rev() {
        monad = match layer {
            StackLayer::State(s) => {
                let adj = make_state_adjunction(s.clone());
                let lifted = lift_monad_trivially(&monad, &adj);
                translate(Rc::new(adj), &lifted)?
            }
            StackLayer::Writer(monoid) => {
                let adj = Rc::new(make_writer_adjunction(monoid.clone())?);
                let strength = canonical_strength(&monad);
                let lifted = lift_monad_to_mset(&monad, &strength, &adj, budget)?;
                translate(adj, &lifted)?
            }
            StackLayer::Reader(e) => {
                let adj = make_reader_adjunction(e.clone());
                let strength = canonical_strength(&monad);
                let lifted = lift_monad_to_reader(&monad, &strength, &adj);
                translate(Rc::new(adj), &lifted)?
            }
            StackLayer::Error(e) => {
                let adj = Rc::new(make_error_adjunction(e.clone()));
                let lifted = lift_monad_to_coslice(&monad, &adj, budget)?;
                translate(adj, &lifted)?
            }
        };
    }
    Ok(monad)
}
