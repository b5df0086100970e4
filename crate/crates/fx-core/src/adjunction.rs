//! The adjunction contract shared by all four instances.
//!
//! An [`Adjunction`] packages a pair of functors `F : C -> D`, `U : D -> C`
//! together with their unit and counit. The instance category `D` is not a
//! compile-time construct: its objects are [`DObject`] descriptors (a carrier
//! plus optional structure — a monoid action for the writer instance, a base
//! point for the error instance) and its morphisms are [`DMorphism`]s whose
//! payload is an ordinary [`FiniteFunction`] (over `X x E` for the reader
//! instance). Composition and identities are supplied per instance because
//! their shape differs.
//!
//! On top of the contract this module provides the transpose bijections
//! [`phi`] and [`phi_inv`], the triangle-identity and naturality checkers,
//! the induced monad `U F`, and the [`MonadOnD`] descriptor for monads
//! living on the instance category.

use std::rc::Rc;

use crate::function::FiniteFunction;
use crate::harness::{Budget, Check, LawReport};
use crate::monad::MonadDescriptor;
use crate::universe::{values_of, FiniteType, Value};
use crate::{Error, Result};

/// Instance-specific structure attached to a `D`-object.
#[derive(Clone)]
pub enum DStructure {
    /// No structure: the state and reader instances.
    Plain,
    /// A right monoid action `carrier x M -> carrier` (writer instance).
    Action(FiniteFunction),
    /// A base point `E -> carrier` (error instance).
    Point(FiniteFunction),
}

/// An object of the instance category.
#[derive(Clone)]
pub struct DObject {
    pub carrier: FiniteType,
    pub structure: DStructure,
}

impl DObject {
    pub fn plain(carrier: FiniteType) -> Self {
        DObject {
            carrier,
            structure: DStructure::Plain,
        }
    }

    pub fn with_action(carrier: FiniteType, action: FiniteFunction) -> Self {
        DObject {
            carrier,
            structure: DStructure::Action(action),
        }
    }

    pub fn with_point(carrier: FiniteType, point: FiniteFunction) -> Self {
        DObject {
            carrier,
            structure: DStructure::Point(point),
        }
    }

    pub fn action(&self) -> &FiniteFunction {
        match &self.structure {
            DStructure::Action(a) => a,
            _ => panic!("object {} carries no action", self.carrier),
        }
    }

    pub fn point(&self) -> &FiniteFunction {
        match &self.structure {
            DStructure::Point(p) => p,
            _ => panic!("object {} carries no base point", self.carrier),
        }
    }
}

/// A morphism of the instance category.
///
/// The payload is the concrete representation: a plain function on the
/// carriers for the state, writer, and error instances, and a function out
/// of `carrier x E` for the reader instance. Side conditions (equivariance,
/// point preservation) belong to the owning instance and are checked by
/// [`Adjunction::side_condition`].
#[derive(Clone)]
pub struct DMorphism {
    pub source: DObject,
    pub target: DObject,
    pub payload: FiniteFunction,
}

/// The quadruple `(F, U, unit, counit)` plus the pieces of `D` the generic
/// machinery needs: composition, identities, a deterministic universe of
/// test objects, and a hom-set sampler.
pub trait Adjunction {
    /// Identifies the instance, including its parameter, e.g. `state(z2)`.
    fn name(&self) -> String;

    fn f_obj(&self, x: &FiniteType) -> DObject;
    fn f_mor(&self, f: &FiniteFunction) -> DMorphism;
    fn u_obj(&self, y: &DObject) -> FiniteType;
    fn u_mor(&self, f: &DMorphism) -> FiniteFunction;

    /// `unit_X : X -> U F X` in the base category.
    fn unit(&self, x: &FiniteType) -> FiniteFunction;

    /// `counit_Y : F U Y -> Y` in `D`. Exposed per object because it needs
    /// the object's structure (the action for writer, the point for error).
    fn counit(&self, y: &DObject) -> DMorphism;

    /// Composition in `D` (`g` after `f`).
    fn compose(&self, g: &DMorphism, f: &DMorphism) -> DMorphism;

    fn identity(&self, y: &DObject) -> DMorphism;

    /// Deterministic test objects built over the given base carriers.
    fn d_universe(&self, universe: &[FiniteType]) -> Vec<DObject>;

    /// Valid morphisms `a -> b`, constructed directly (never by filtering
    /// random functions through the side condition, which would find none
    /// for structured instances).
    fn hom_sample(&self, a: &DObject, b: &DObject, budget: &Budget) -> Vec<DMorphism>;

    /// Counterexamples to the instance's side condition for `f`, if any.
    fn side_condition(&self, f: &DMorphism, budget: &Budget) -> Vec<String>;

    /// `Some(x)` iff `y` is (up to extensional equality of structure) the
    /// image `F x`.
    fn free_preimage(&self, y: &DObject) -> Option<FiniteType>;

    /// Carrier over which a morphism's payload is evaluated pointwise; the
    /// reader instance overrides this with `carrier x E`.
    fn payload_domain(&self, source: &DObject) -> FiniteType {
        source.carrier.clone()
    }
}

/// The transpose `phi(f) = U(f) . unit_X` of `f : F X -> Y`.
///
/// Fails with a shape mismatch when the source of `f` is not recognized as
/// a free object.
pub fn phi(adj: &dyn Adjunction, f: &DMorphism) -> Result<FiniteFunction> {
    let x = adj.free_preimage(&f.source).ok_or_else(|| {
        Error::ShapeMismatch(format!(
            "source {} of the morphism is not an image of the left adjoint of {}",
            f.source.carrier,
            adj.name()
        ))
    })?;
    Ok(FiniteFunction::compose(&adj.u_mor(f), &adj.unit(&x)))
}

/// The inverse transpose `phi_inv(g) = counit_Y . F(g)` of `g : X -> U Y`.
///
/// The target object is explicit because the carrier of `U Y` alone does
/// not determine the structure of `Y`.
pub fn phi_inv(
    adj: &dyn Adjunction,
    g: &FiniteFunction,
    target: &DObject,
) -> Result<DMorphism> {
    if *g.cod() != adj.u_obj(target) {
        return Err(Error::ShapeMismatch(format!(
            "codomain {} of the transpose does not match U({}) = {}",
            g.cod(),
            target.carrier,
            adj.u_obj(target)
        )));
    }
    Ok(adj.compose(&adj.counit(target), &adj.f_mor(g)))
}

/// Compare two parallel `D`-morphisms pointwise on their payload domain.
fn d_morphisms_agree(
    adj: &dyn Adjunction,
    lhs: &DMorphism,
    rhs: &DMorphism,
    budget: &Budget,
    check: &mut Check,
    context: &dyn Fn() -> String,
) {
    let dom = adj.payload_domain(&lhs.source);
    for v in values_of(&dom, budget) {
        check.case_eq(&lhs.payload.apply(&v), &rhs.payload.apply(&v), || {
            format!("{} at {v}", context())
        });
    }
}

/// Both counit-unit equations, pointwise over the instance's test objects.
///
/// The first triangle `counit_{F X} . F(unit_X) = id_{F X}` is checked for
/// every base carrier; the second `U(counit_Y) . unit_{U Y} = id_{U Y}` for
/// every object of the instance universe.
pub fn check_triangle_identities(
    adj: &dyn Adjunction,
    universe: &[FiniteType],
    budget: &Budget,
) -> LawReport {
    let mut report = LawReport::new(format!("triangles({})", adj.name()));

    let mut tri_f = Check::new("counit-unit-triangle-F", "adjunction.triangle.F");
    for x in universe {
        let fx = adj.f_obj(x);
        let lhs = adj.compose(&adj.counit(&fx), &adj.f_mor(&adj.unit(x)));
        let rhs = adj.identity(&fx);
        d_morphisms_agree(adj, &lhs, &rhs, budget, &mut tri_f, &|| format!("X={x}"));
    }
    report.push(tri_f.finish());

    let mut tri_u = Check::new("counit-unit-triangle-U", "adjunction.triangle.U");
    for y in adj.d_universe(universe) {
        let uy = adj.u_obj(&y);
        let lhs = FiniteFunction::compose(&adj.u_mor(&adj.counit(&y)), &adj.unit(&uy));
        for v in values_of(&uy, budget) {
            tri_u.case_eq(&lhs.apply(&v), &v, || {
                format!("Y={}, v={v}", y.carrier)
            });
        }
    }
    report.push(tri_u.finish());
    report
}

/// Naturality of the unit and counit, bijectivity of the transposes, and
/// naturality of `phi` in both arguments, over sampled hom-sets.
pub fn check_adjunction_naturality(
    adj: &dyn Adjunction,
    universe: &[FiniteType],
    budget: &Budget,
) -> LawReport {
    let mut report = LawReport::new(format!("naturality({})", adj.name()));
    let d_objects = adj.d_universe(universe);

    let mut unit_nat = Check::new("unit-naturality", "adjunction.unit.naturality");
    for x in universe {
        for y in universe {
            for f in crate::function::hom_set(x, y, budget) {
                let lhs = FiniteFunction::compose(&adj.unit(y), &f);
                let rhs =
                    FiniteFunction::compose(&adj.u_mor(&adj.f_mor(&f)), &adj.unit(x));
                for v in values_of(x, budget) {
                    unit_nat.case_eq(&lhs.apply(&v), &rhs.apply(&v), || {
                        format!("f : {x} -> {y} at {v}")
                    });
                }
            }
        }
    }
    report.push(unit_nat.finish());

    let mut counit_nat = Check::new("counit-naturality", "adjunction.counit.naturality");
    for a in &d_objects {
        for b in &d_objects {
            for f in adj.hom_sample(a, b, budget) {
                // counit_B . F U (f) = f . counit_A
                let fuf = adj.f_mor(&adj.u_mor(&f));
                let lhs = adj.compose(&adj.counit(b), &fuf);
                let rhs = adj.compose(&f, &adj.counit(a));
                d_morphisms_agree(adj, &lhs, &rhs, budget, &mut counit_nat, &|| {
                    format!("f : {} -> {}", a.carrier, b.carrier)
                });
            }
        }
    }
    report.push(counit_nat.finish());

    let mut forward = Check::new("phi-after-phi-inv", "adjunction.phi.forward");
    let mut backward = Check::new("phi-inv-after-phi", "adjunction.phi.backward");
    for x in universe {
        for w in &d_objects {
            let uw = adj.u_obj(w);
            for g in crate::function::hom_set(x, &uw, budget) {
                let f = phi_inv(adj, &g, w).expect("shapes match by construction");
                let back = phi(adj, &f).expect("phi_inv lands on a free source");
                for v in values_of(x, budget) {
                    forward.case_eq(&back.apply(&v), &g.apply(&v), || {
                        format!("g : {x} -> {uw} at {v}")
                    });
                }
            }
            let fx = adj.f_obj(x);
            for f in adj.hom_sample(&fx, w, budget) {
                let g = phi(adj, &f).expect("source is free");
                let round = phi_inv(adj, &g, w).expect("shapes match");
                d_morphisms_agree(adj, &round, &f, budget, &mut backward, &|| {
                    format!("f : F({x}) -> {}", w.carrier)
                });
            }
        }
    }
    report.push(forward.finish());
    report.push(backward.finish());

    // phi(f . F(h)) = phi(f) . h  and  phi(k . f) = U(k) . phi(f)
    let mut phi_nat = Check::new("phi-naturality", "adjunction.phi.naturality");
    for x in universe {
        for x2 in universe {
            let fx2 = adj.f_obj(x2);
            for w in &d_objects {
                let homs = adj.hom_sample(&fx2, w, budget);
                let hs = crate::function::hom_set(x, x2, budget);
                for f in homs.iter().take(4) {
                    for h in hs.iter().take(4) {
                        let lhs =
                            phi(adj, &adj.compose(f, &adj.f_mor(h))).expect("free source");
                        let rhs = FiniteFunction::compose(
                            &phi(adj, f).expect("free source"),
                            h,
                        );
                        for v in values_of(x, budget) {
                            phi_nat.case_eq(&lhs.apply(&v), &rhs.apply(&v), || {
                                format!("precompose h : {x} -> {x2}, at {v}")
                            });
                        }
                    }
                    for w2 in d_objects.iter().take(2) {
                        for k in adj.hom_sample(w, w2, budget).iter().take(4) {
                            let lhs = phi(adj, &adj.compose(k, f)).expect("free source");
                            let rhs =
                                FiniteFunction::compose(&adj.u_mor(k), &phi(adj, f).unwrap());
                            for v in values_of(x2, budget) {
                                phi_nat.case_eq(&lhs.apply(&v), &rhs.apply(&v), || {
                                    format!("postcompose k, at {v}")
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(phi_nat.finish());
    report
}

/// The monad `(U F, unit, U(counit_F))` induced by the adjunction.
pub fn induced_monad(adj: Rc<dyn Adjunction>) -> MonadDescriptor {
    let name = format!("induced({})", adj.name());
    let lift = {
        let adj = adj.clone();
        move |x: &FiniteType| adj.u_obj(&adj.f_obj(x))
    };
    let map = {
        let adj = adj.clone();
        move |f: &FiniteFunction, v: &Value| adj.u_mor(&adj.f_mor(f)).apply(v)
    };
    let unit = {
        let adj = adj.clone();
        move |x: &FiniteType, v: &Value| adj.unit(x).apply(v)
    };
    let mult = {
        let adj = adj.clone();
        move |x: &FiniteType, v: &Value| {
            adj.u_mor(&adj.counit(&adj.f_obj(x))).apply(v)
        }
    };
    MonadDescriptor::new(name, lift, map, unit, mult)
}

type ObjMap = dyn Fn(&DObject) -> DObject;
type MorMap = dyn Fn(&DMorphism) -> DMorphism;
type At = dyn Fn(&DObject) -> DMorphism;

/// A monad on the instance category: object and morphism actions plus unit
/// and multiplication components, each a `D`-morphism at a given object.
#[derive(Clone)]
pub struct MonadOnD {
    pub name: String,
    /// Name of the adjunction this monad belongs to.
    pub owner: String,
    lift_obj: Rc<ObjMap>,
    map_mor: Rc<MorMap>,
    unit_at: Rc<At>,
    mult_at: Rc<At>,
}

impl MonadOnD {
    pub fn new(
        name: impl Into<String>,
        owner: impl Into<String>,
        lift_obj: impl Fn(&DObject) -> DObject + 'static,
        map_mor: impl Fn(&DMorphism) -> DMorphism + 'static,
        unit_at: impl Fn(&DObject) -> DMorphism + 'static,
        mult_at: impl Fn(&DObject) -> DMorphism + 'static,
    ) -> Self {
        MonadOnD {
            name: name.into(),
            owner: owner.into(),
            lift_obj: Rc::new(lift_obj),
            map_mor: Rc::new(map_mor),
            unit_at: Rc::new(unit_at),
            mult_at: Rc::new(mult_at),
        }
    }

    pub fn lift_obj(&self, w: &DObject) -> DObject {
        (self.lift_obj)(w)
    }

    pub fn map_mor(&self, f: &DMorphism) -> DMorphism {
        (self.map_mor)(f)
    }

    pub fn unit_at(&self, w: &DObject) -> DMorphism {
        (self.unit_at)(w)
    }

    pub fn mult_at(&self, w: &DObject) -> DMorphism {
        (self.mult_at)(w)
    }

    /// Replace the multiplication component (negative-control fixtures).
    pub fn with_mult_at(&self, mult_at: impl Fn(&DObject) -> DMorphism + 'static) -> Self {
        MonadOnD {
            name: format!("{}-corrupted", self.name),
            owner: self.owner.clone(),
            lift_obj: self.lift_obj.clone(),
            map_mor: self.map_mor.clone(),
            unit_at: self.unit_at.clone(),
            mult_at: Rc::new(mult_at),
        }
    }
}

/// The identity monad on the instance category; translating along it
/// recovers the induced monad of the adjunction.
pub fn identity_monad_on(adj: Rc<dyn Adjunction>) -> MonadOnD {
    let id_unit = adj.clone();
    let id_mult = adj.clone();
    MonadOnD::new(
        "identity",
        adj.name(),
        |w| w.clone(),
        |f| f.clone(),
        move |w| id_unit.identity(w),
        move |w| id_mult.identity(w),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::error::make_error_adjunction;
    use crate::instances::state::make_state_adjunction;
    use crate::instances::writer::make_writer_adjunction;
    use crate::monoid::Monoid;

    fn z2() -> FiniteType {
        FiniteType::Mod(2)
    }

    #[test]
    fn phi_inv_of_the_unit_is_the_identity_morphism() {
        let budget = Budget::default();
        let instances: Vec<Box<dyn Adjunction>> = vec![
            Box::new(make_state_adjunction(z2())),
            Box::new(make_writer_adjunction(Monoid::z4_add()).unwrap()),
            Box::new(make_error_adjunction(z2())),
        ];
        for adj in &instances {
            let x = FiniteType::Bool;
            let fx = adj.f_obj(&x);
            let round = phi_inv(adj.as_ref(), &adj.unit(&x), &fx).unwrap();
            let id = adj.identity(&fx);
            for v in values_of(&adj.payload_domain(&fx), &budget) {
                assert_eq!(
                    round.payload.apply(&v),
                    id.payload.apply(&v),
                    "{} at {v}",
                    adj.name()
                );
            }
        }
    }

    #[test]
    fn phi_of_the_free_identity_is_the_unit() {
        let adj = make_state_adjunction(z2());
        let x = FiniteType::Mod(3);
        let transposed = phi(&adj, &adj.identity(&adj.f_obj(&x))).unwrap();
        let unit = adj.unit(&x);
        for v in x.enumerate().unwrap() {
            assert_eq!(transposed.apply(&v), unit.apply(&v));
        }
    }

    #[test]
    fn phi_inv_evaluates_the_transposed_table() {
        // g : 1 -> z2^z2 constant at the identity table; the mate sends
        // (*, s) to s.
        let adj = make_state_adjunction(z2());
        let id_table = Value::table(z2(), vec![Value::Nat(0), Value::Nat(1)]);
        let g = FiniteFunction::constant(
            FiniteType::Unit,
            FiniteType::exp(z2(), z2()),
            id_table,
        );
        let target = DObject::plain(z2());
        let mate = phi_inv(&adj, &g, &target).unwrap();
        for s in z2().enumerate().unwrap() {
            assert_eq!(
                mate.payload.apply(&Value::pair(Value::Unit, s.clone())),
                s
            );
        }
    }

    #[test]
    fn phi_rejects_non_free_sources() {
        let adj = make_state_adjunction(z2());
        let not_free = DObject::plain(FiniteType::Bool);
        let f = DMorphism {
            source: not_free.clone(),
            target: not_free,
            payload: FiniteFunction::identity(FiniteType::Bool),
        };
        assert!(matches!(phi(&adj, &f), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn phi_inv_rejects_mismatched_codomains() {
        let adj = make_state_adjunction(z2());
        let g = FiniteFunction::identity(FiniteType::Bool);
        let target = DObject::plain(FiniteType::Bool);
        assert!(matches!(
            phi_inv(&adj, &g, &target),
            Err(Error::ShapeMismatch(_))
        ));
    }
}
