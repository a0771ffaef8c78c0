//! The named ideal spaces of a ring, selected from its classification.
//!
//! Conventions where a family could be read more than one way:
//! `Prp` is the proper ideals; `Fgn` the proper finitely generated ones
//! (all proper ideals here); `Prn` every principal ideal, `(0)` and `R`
//! included; `Reg` the proper ideals containing a regular element (always
//! empty for a finite ring, since regular elements are units there); `Min`
//! the minimal nonzero ideals; `Irr`, `Irc`, `Irs` proper ideals only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ideal::{IdealClassification, IdealFlags, IdealLattice};
use crate::topology::IdealSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Spec,
    Max,
    Prp,
    Rad,
    Min,
    Spn,
    Prm,
    Nil,
    Nip,
    Irr,
    Irc,
    Prn,
    Reg,
    Fgn,
    Irs,
    Idl,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::Spec,
        Family::Max,
        Family::Prp,
        Family::Rad,
        Family::Min,
        Family::Spn,
        Family::Prm,
        Family::Nil,
        Family::Nip,
        Family::Irr,
        Family::Irc,
        Family::Prn,
        Family::Reg,
        Family::Fgn,
        Family::Irs,
        Family::Idl,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Spec => "spec",
            Family::Max => "max",
            Family::Prp => "prp",
            Family::Rad => "rad",
            Family::Min => "min",
            Family::Spn => "spn",
            Family::Prm => "prm",
            Family::Nil => "nil",
            Family::Nip => "nip",
            Family::Irr => "irr",
            Family::Irc => "irc",
            Family::Prn => "prn",
            Family::Reg => "reg",
            Family::Fgn => "fgn",
            Family::Irs => "irs",
            Family::Idl => "idl",
        }
    }

    /// Display name such as `Spec` or `Prm`.
    pub fn name(self) -> &'static str {
        match self {
            Family::Spec => "Spec",
            Family::Max => "Max",
            Family::Prp => "Prp",
            Family::Rad => "Rad",
            Family::Min => "Min",
            Family::Spn => "Spn",
            Family::Prm => "Prm",
            Family::Nil => "Nil",
            Family::Nip => "Nip",
            Family::Irr => "Irr",
            Family::Irc => "Irc",
            Family::Prn => "Prn",
            Family::Reg => "Reg",
            Family::Fgn => "Fgn",
            Family::Irs => "Irs",
            Family::Idl => "Idl",
        }
    }

    pub fn contains(self, f: &IdealFlags) -> bool {
        match self {
            Family::Spec => f.prime,
            Family::Max => f.maximal,
            Family::Prp => f.proper,
            Family::Rad => f.radical && f.proper,
            Family::Min => f.minimal,
            Family::Spn => f.minimal_prime,
            Family::Prm => f.primary,
            Family::Nil => f.nil,
            Family::Nip => f.nilpotent,
            Family::Irr => f.irreducible && f.proper,
            Family::Irc => f.completely_irreducible && f.proper,
            Family::Prn => f.principal,
            Family::Reg => f.regular && f.proper,
            Family::Fgn => f.finitely_generated && f.proper,
            Family::Irs => f.strongly_irreducible && f.proper,
            Family::Idl => true,
        }
    }

    /// Lattice indices of the family's members, ascending.
    pub fn members(self, cls: &IdealClassification) -> Vec<usize> {
        cls.indices_where(|f| self.contains(f))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let lower = s.trim().to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == lower)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family `{s}`")))
    }
}

pub fn build_space<'a>(lat: &'a IdealLattice, cls: &IdealClassification, family: Family) -> IdealSpace<'a> {
    IdealSpace::new(lat, family.members(cls), Some(family))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyInclusions {
    pub max_in_irs_and_spec: bool,
    pub spec_in_prm: bool,
    pub prm_in_irr: bool,
    pub irc_in_irr: bool,
    pub irs_in_irr: bool,
    /// `Max ⊆ X` for each of Max, Spec, Irs, Prm, Irr, Irc, Rad, Prp.
    pub max_in: Vec<(Family, bool)>,
    pub fgn_eq_prp: bool,
    pub reg_empty: bool,
    pub nil_eq_nip: bool,
    pub spec_eq_max_eq_spn: bool,
}

impl FamilyInclusions {
    pub fn all_hold(&self) -> bool {
        self.max_in_irs_and_spec
            && self.spec_in_prm
            && self.prm_in_irr
            && self.irc_in_irr
            && self.irs_in_irr
            && self.max_in.iter().all(|(_, ok)| *ok)
            && self.fgn_eq_prp
            && self.reg_empty
            && self.nil_eq_nip
            && self.spec_eq_max_eq_spn
    }
}

/// Families over which maximal ideals are required to lie for the
/// quasi-compactness corollary.
pub const MAX_CONTAINING: [Family; 8] = [
    Family::Max,
    Family::Spec,
    Family::Irs,
    Family::Prm,
    Family::Irr,
    Family::Irc,
    Family::Rad,
    Family::Prp,
];

pub fn family_inclusions_report(cls: &IdealClassification) -> FamilyInclusions {
    let set = |f: Family| f.members(cls);
    let sub = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
    let max = set(Family::Max);
    let spec = set(Family::Spec);
    let irs = set(Family::Irs);
    let irr = set(Family::Irr);
    FamilyInclusions {
        max_in_irs_and_spec: sub(&max, &irs) && sub(&max, &spec),
        spec_in_prm: sub(&spec, &set(Family::Prm)),
        prm_in_irr: sub(&set(Family::Prm), &irr),
        irc_in_irr: sub(&set(Family::Irc), &irr),
        irs_in_irr: sub(&irs, &irr),
        max_in: MAX_CONTAINING
            .iter()
            .map(|&f| (f, sub(&max, &set(f))))
            .collect(),
        fgn_eq_prp: set(Family::Fgn) == set(Family::Prp),
        reg_empty: set(Family::Reg).is_empty(),
        nil_eq_nip: set(Family::Nil) == set(Family::Nip),
        spec_eq_max_eq_spn: spec == max && spec == set(Family::Spn),
    }
}
