//! The registered test universes, base monads, and monoids.

use crate::monad::{identity_monad, list_monad, option_monad, writer_monad, MonadDescriptor};
use crate::monoid::Monoid;
use crate::universe::FiniteType;
use crate::{Error, Result};

/// Length cap used when enumerating list-monad carriers.
pub const LIST_CAP: u8 = 3;

pub fn unit_ty() -> FiniteType {
    FiniteType::Unit
}

pub fn bool_ty() -> FiniteType {
    FiniteType::Bool
}

pub fn z2() -> FiniteType {
    FiniteType::Mod(2)
}

pub fn z3() -> FiniteType {
    FiniteType::Mod(3)
}

pub fn z4() -> FiniteType {
    FiniteType::Mod(4)
}

/// The carriers every suite quantifies over.
pub fn standard_universe() -> Vec<FiniteType> {
    vec![unit_ty(), bool_ty(), z2(), z3()]
}

/// A smaller universe for the deeply nested diagram checks.
pub fn diagram_universe() -> Vec<FiniteType> {
    vec![unit_ty(), bool_ty()]
}

/// Look up a registered universe by name.
pub fn universe_by_name(name: &str) -> Result<FiniteType> {
    match name {
        "1" | "unit" => Ok(unit_ty()),
        "bool" => Ok(bool_ty()),
        "z2" => Ok(z2()),
        "z3" => Ok(z3()),
        "z4" => Ok(z4()),
        other => Err(Error::UnknownType(other.to_string())),
    }
}

/// Enumerate a registered universe by name, in canonical order.
pub fn enumerate_universe(name: &str) -> Result<Vec<crate::universe::Value>> {
    universe_by_name(name)?.enumerate()
}

pub fn standard_monoids() -> Vec<Monoid> {
    vec![Monoid::z4_add(), Monoid::bool_and()]
}

/// Selector for the registered base monads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseMonad {
    Identity,
    Option,
    List,
    Writer,
}

impl BaseMonad {
    pub fn all() -> [BaseMonad; 4] {
        [
            BaseMonad::Identity,
            BaseMonad::Option,
            BaseMonad::List,
            BaseMonad::Writer,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseMonad::Identity => "identity",
            BaseMonad::Option => "option",
            BaseMonad::List => "list",
            BaseMonad::Writer => "writer",
        }
    }

    pub fn parse(name: &str) -> Result<BaseMonad> {
        match name {
            "identity" => Ok(BaseMonad::Identity),
            "option" => Ok(BaseMonad::Option),
            "list" => Ok(BaseMonad::List),
            "writer" => Ok(BaseMonad::Writer),
            other => Err(Error::UnknownType(other.to_string())),
        }
    }

    pub fn descriptor(self) -> MonadDescriptor {
        match self {
            BaseMonad::Identity => identity_monad(),
            BaseMonad::Option => option_monad(),
            BaseMonad::List => list_monad(LIST_CAP),
            BaseMonad::Writer => writer_monad(&Monoid::bool_and()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            universe_by_name("nosuch"),
            Err(Error::UnknownType(_))
        ));
        assert!(matches!(BaseMonad::parse("maybe"), Err(Error::UnknownType(_))));
    }

    #[test]
    fn repeated_enumeration_agrees() {
        for name in ["1", "bool", "z2", "z3", "z4"] {
            assert_eq!(
                enumerate_universe(name).unwrap(),
                enumerate_universe(name).unwrap()
            );
        }
    }
}
