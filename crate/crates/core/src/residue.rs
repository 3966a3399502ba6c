//! Subsets of `Z_n` and the additive operations used on rotation exponents.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueSet {
    modulus: u32,
    members: BTreeSet<u32>,
}

impl ResidueSet {
    pub fn new<I: IntoIterator<Item = i64>>(modulus: u32, members: I) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Domain("modulus must be positive".into()));
        }
        Ok(ResidueSet {
            modulus,
            members: members
                .into_iter()
                .map(|a| a.rem_euclid(modulus as i64) as u32)
                .collect(),
        })
    }

    pub fn empty(modulus: u32) -> Self {
        ResidueSet {
            modulus,
            members: BTreeSet::new(),
        }
    }

    /// All of `Z_n`.
    pub fn full(modulus: u32) -> Self {
        ResidueSet {
            modulus,
            members: (0..modulus).collect(),
        }
    }

    /// Members given by a bitmask (bit `i` ⇔ residue `i`); `modulus <= 64`.
    pub fn from_bits(modulus: u32, bits: u64) -> Self {
        ResidueSet {
            modulus,
            members: (0..modulus.min(64))
                .filter(|&i| bits >> i & 1 == 1)
                .collect(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: u32) -> bool {
        self.members.contains(&a)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn insert(&mut self, a: i64) {
        self.members
            .insert(a.rem_euclid(self.modulus as i64) as u32);
    }

    pub fn translate(&self, c: i64) -> Self {
        ResidueSet {
            modulus: self.modulus,
            members: self
                .iter()
                .map(|a| (a as i64 + c).rem_euclid(self.modulus as i64) as u32)
                .collect(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.modulus as usize
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}} mod {}", self.modulus)
    }
}

/// `A + B = {a + b mod n}`.
pub fn sumset(a: &ResidueSet, b: &ResidueSet) -> Result<ResidueSet> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch(a.modulus, b.modulus));
    }
    let n = a.modulus as u64;
    let members = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| ((x as u64 + y as u64) % n) as u32))
        .collect();
    Ok(ResidueSet {
        modulus: a.modulus,
        members,
    })
}

/// `2·A = {2a mod n}`.
pub fn double_set(a: &ResidueSet) -> ResidueSet {
    let n = a.modulus as u64;
    ResidueSet {
        modulus: a.modulus,
        members: a.iter().map(|x| (2 * x as u64 % n) as u32).collect(),
    }
}

/// Pairs `(u, u + n/2)` inside a residue set with even modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedPairReport {
    pub modulus: u32,
    pub pairs: Vec<(u32, u32)>,
    /// Members whose mate `u + n/2` is absent.
    pub unmatched: Vec<u32>,
}

pub fn matched_pairs(a: &ResidueSet) -> Result<MatchedPairReport> {
    let n = a.modulus;
    if !n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "matched pairs need an even modulus, got {n}"
        )));
    }
    let half = n / 2;
    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    for u in a.iter() {
        let mate = (u + half) % n;
        if a.contains(mate) {
            if u < half {
                pairs.push((u, mate));
            }
        } else {
            unmatched.push(u);
        }
    }
    Ok(MatchedPairReport {
        modulus: n,
        pairs,
        unmatched,
    })
}
