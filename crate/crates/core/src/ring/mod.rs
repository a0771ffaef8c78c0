//! Finite commutative rings: specifications, parsing and element arithmetic.

mod finite;
mod parse;
mod spec;

pub use finite::{
    build_ring, localize_at_maximal, quotient_ring, Elem, FiniteRing, Projection,
    EXHAUSTIVE_AXIOM_LIMIT, TABLE_LIMIT,
};
pub use parse::{parse_element, parse_ring_spec};
pub use spec::{ElementExpr, RingSpec};
