use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Constructive description of a finite commutative ring with identity.
///
/// Polynomial coefficients are stored lowest degree first, so `x^2 + 1`
/// over `GF(2)` is `coeffs: [1, 0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingSpec {
    Zmod {
        n: u64,
    },
    #[serde(rename = "polyquot")]
    PolyQuot {
        p: u64,
        coeffs: Vec<u64>,
    },
    Product {
        factors: Vec<RingSpec>,
    },
    Quotient {
        base: Box<RingSpec>,
        gens: Vec<ElementExpr>,
    },
}

/// An element written in ring-independent syntax: an integer polynomial in
/// `x` (plain integers are constant polynomials) or a tuple for products.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementExpr {
    /// Integer coefficients, lowest degree first. Trailing zeros are trimmed.
    Poly(Vec<i64>),
    Tuple(Vec<ElementExpr>),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    pub fn zmod(n: u64) -> Self {
        RingSpec::Zmod { n }
    }

    pub fn poly_quot(p: u64, coeffs: Vec<u64>) -> Self {
        RingSpec::PolyQuot { p, coeffs }
    }

    pub fn product(factors: Vec<RingSpec>) -> Self {
        RingSpec::Product { factors }
    }

    pub fn quotient(base: RingSpec, gens: Vec<ElementExpr>) -> Self {
        RingSpec::Quotient {
            base: Box::new(base),
            gens,
        }
    }

    /// Checks the structural invariants; does not build the ring.
    pub fn validate(&self) -> Result<()> {
        match self {
            RingSpec::Zmod { n } => {
                if *n < 2 {
                    return Err(Error::InvalidSpec(format!("Z/{n}: modulus must be at least 2")));
                }
            }
            RingSpec::PolyQuot { p, coeffs } => {
                if !is_prime(*p) {
                    return Err(Error::InvalidSpec(format!("GF({p}): {p} is not prime")));
                }
                if coeffs.len() < 2 {
                    return Err(Error::InvalidSpec(
                        "polynomial modulus must have degree at least 1".into(),
                    ));
                }
                if let Some(c) = coeffs.iter().find(|&&c| c >= *p) {
                    return Err(Error::InvalidSpec(format!(
                        "coefficient {c} is not reduced modulo {p}"
                    )));
                }
                if coeffs.last() != Some(&1) {
                    return Err(Error::InvalidSpec(format!(
                        "polynomial modulus {} is not monic",
                        ElementExpr::Poly(coeffs.iter().map(|&c| c as i64).collect())
                    )));
                }
            }
            RingSpec::Product { factors } => {
                if factors.is_empty() {
                    return Err(Error::InvalidSpec("empty product".into()));
                }
                for f in factors {
                    f.validate()?;
                }
            }
            RingSpec::Quotient { base, .. } => base.validate()?,
        }
        Ok(())
    }

    /// Cardinality before taking quotients into account, `None` on overflow.
    /// For a quotient this is the size of the base ring.
    pub fn ambient_size(&self) -> Option<u64> {
        match self {
            RingSpec::Zmod { n } => Some(*n),
            RingSpec::PolyQuot { p, coeffs } => p.checked_pow(coeffs.len().checked_sub(1)? as u32),
            RingSpec::Product { factors } => factors
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.ambient_size()?)),
            RingSpec::Quotient { base, .. } => base.ambient_size(),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod { n } => write!(f, "Z/{n}"),
            RingSpec::PolyQuot { p, coeffs } => {
                let poly = ElementExpr::Poly(coeffs.iter().map(|&c| c as i64).collect());
                write!(f, "GF({p})[x]/({poly})")
            }
            RingSpec::Product { factors } => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    if matches!(factor, RingSpec::Product { .. }) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
            RingSpec::Quotient { base, gens } => {
                if matches!(**base, RingSpec::Product { .. }) {
                    write!(f, "({base})")?;
                } else {
                    write!(f, "{base}")?;
                }
                f.write_str(" / (")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_ring_spec(s)
    }
}

impl ElementExpr {
    pub fn int(c: i64) -> Self {
        ElementExpr::Poly(vec![c]).normalized()
    }

    pub(crate) fn normalized(self) -> Self {
        match self {
            ElementExpr::Poly(mut c) => {
                while c.last() == Some(&0) {
                    c.pop();
                }
                ElementExpr::Poly(c)
            }
            ElementExpr::Tuple(items) => {
                ElementExpr::Tuple(items.into_iter().map(ElementExpr::normalized).collect())
            }
        }
    }
}

impl fmt::Display for ElementExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementExpr::Tuple(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
            ElementExpr::Poly(coeffs) => {
                let mut wrote = false;
                for (deg, &c) in coeffs.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    if wrote {
                        f.write_str(if c < 0 { "-" } else { "+" })?;
                    } else if c < 0 {
                        f.write_str("-")?;
                    }
                    let a = c.unsigned_abs();
                    match deg {
                        0 => write!(f, "{a}")?,
                        _ => {
                            if a != 1 {
                                write!(f, "{a}")?;
                            }
                            f.write_str("x")?;
                            if deg > 1 {
                                write!(f, "^{deg}")?;
                            }
                        }
                    }
                    wrote = true;
                }
                if !wrote {
                    f.write_str("0")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for ElementExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_element(s)
    }
}

impl Serialize for ElementExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ElementExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
