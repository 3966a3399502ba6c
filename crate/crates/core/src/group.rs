//! Finite groups: dihedral groups in closed form and small groups given by an
//! explicit Cayley table.
//!
//! Every group has at most [`MAX_ORDER`] elements, addressed by dense ids.
//! Id 0 is always the identity. For `D_2n` the layout is
//! `y^0, ..., y^{n-1}, x·y^0, ..., x·y^{n-1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported group order; subsets must fit one `u64`.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u8);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An element `x^refl · y^rot` of `D_2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub refl: bool,
    pub rot: u32,
}

impl DihedralElement {
    pub const IDENTITY: DihedralElement = DihedralElement {
        refl: false,
        rot: 0,
    };

    pub fn new(refl: bool, rot: i64, n: u32) -> Self {
        DihedralElement {
            refl,
            rot: rot.rem_euclid(n as i64) as u32,
        }
    }

    pub fn rotation(k: i64, n: u32) -> Self {
        Self::new(false, k, n)
    }

    pub fn reflection(k: i64, n: u32) -> Self {
        Self::new(true, k, n)
    }

    /// Product in `D_2n`, using `y^a x = x y^{-a}`.
    #[inline]
    pub fn mul(self, other: Self, n: u32) -> Self {
        if other.refl {
            // x^e y^a · x y^b = x^{e+1} y^{b-a}
            DihedralElement {
                refl: !self.refl,
                rot: (other.rot + n - self.rot) % n,
            }
        } else {
            DihedralElement {
                refl: self.refl,
                rot: (self.rot + other.rot) % n,
            }
        }
    }

    #[inline]
    pub fn to_id(self, n: u32) -> ElementId {
        ElementId((self.rot + if self.refl { n } else { 0 }) as u8)
    }

    #[inline]
    pub fn from_id(id: ElementId, n: u32) -> Self {
        let i = id.0 as u32;
        if i < n {
            DihedralElement {
                refl: false,
                rot: i,
            }
        } else {
            DihedralElement {
                refl: true,
                rot: i - n,
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Dihedral { n: u32 },
    Table,
}

/// A subset of a group's element list, one bit per element id.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_ids<I: IntoIterator<Item = ElementId>>(ids: I) -> Self {
        SubsetMask(ids.into_iter().fold(0u64, |m, id| m | 1u64 << id.0))
    }

    /// The first `order` elements.
    pub fn full(order: usize) -> Self {
        if order >= 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << order) - 1)
        }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, id: ElementId) -> bool {
        self.0 >> id.0 & 1 == 1
    }

    pub fn with(self, id: ElementId) -> Self {
        SubsetMask(self.0 | 1u64 << id.0)
    }

    pub fn without(self, id: ElementId) -> Self {
        SubsetMask(self.0 & !(1u64 << id.0))
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    /// Element ids in increasing order.
    pub fn iter(self) -> impl Iterator<Item = ElementId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                Some(ElementId(i as u8))
            }
        })
    }

    pub fn to_vec(self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

/// Lookup tables for applying `p ↦ p·z` to a whole bitset of products at
/// once, eight bits at a time.
#[derive(Clone)]
struct RightMulTable {
    chunks: usize,
    images: Vec<u64>,
}

impl RightMulTable {
    fn build(order: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let chunks = order.div_ceil(8);
        let mut images = vec![0u64; order * chunks * 256];
        for z in 0..order {
            for c in 0..chunks {
                let base = (z * chunks + c) * 256;
                for byte in 1..256usize {
                    let mut img = 0u64;
                    for bit in 0..8 {
                        let p = c * 8 + bit;
                        if byte >> bit & 1 == 1 && p < order {
                            img |= 1u64 << mul(p, z);
                        }
                    }
                    images[base + byte] = img;
                }
            }
        }
        RightMulTable { chunks, images }
    }

    #[inline]
    fn apply(&self, set: u64, z: usize) -> u64 {
        let base = z * self.chunks * 256;
        let mut out = 0u64;
        for c in 0..self.chunks {
            let byte = (set >> (8 * c) & 0xff) as usize;
            if byte != 0 {
                out |= self.images[base + c * 256 + byte];
            }
        }
        out
    }
}

/// An immutable finite group. Cheap to share between worker threads.
#[derive(Clone)]
pub struct GroupModel {
    label: String,
    kind: GroupKind,
    order: usize,
    table: Option<Vec<u8>>,
    inverses: Vec<u8>,
    right_mul: RightMulTable,
}

impl fmt::Debug for GroupModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupModel")
            .field("label", &self.label)
            .field("kind", &self.kind)
            .field("order", &self.order)
            .finish()
    }
}

/// `D_2n` of order `2n`. Requires `3 <= n <= 32`.
pub fn dihedral_group(n: u32) -> Result<GroupModel> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "dihedral group needs n >= 3, got n = {n}"
        )));
    }
    let order = 2 * n as usize;
    if order > MAX_ORDER {
        return Err(Error::Capacity {
            what: "group order",
            got: order,
            limit: MAX_ORDER,
        });
    }
    let mul = |a: usize, b: usize| {
        let a = DihedralElement::from_id(ElementId(a as u8), n);
        let b = DihedralElement::from_id(ElementId(b as u8), n);
        a.mul(b, n).to_id(n).index()
    };
    let inverses = (0..order)
        .map(|i| {
            if i < n as usize {
                ((n as usize - i) % n as usize) as u8
            } else {
                i as u8
            }
        })
        .collect();
    Ok(GroupModel {
        label: format!("D{order}"),
        kind: GroupKind::Dihedral { n },
        order,
        table: None,
        inverses,
        right_mul: RightMulTable::build(order, mul),
    })
}

impl GroupModel {
    /// Builds a group from a row-major Cayley table `table[a][b] = a·b`.
    ///
    /// The table is checked exhaustively: id 0 must be a two-sided identity,
    /// every element must have an inverse, and the operation must be
    /// associative.
    pub fn from_table(label: impl Into<String>, table: &[Vec<usize>]) -> Result<GroupModel> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::Capacity {
                what: "group order",
                got: order,
                limit: MAX_ORDER,
            });
        }
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::InvalidTable(format!(
                        "entry {v} out of range in row {a}"
                    )));
                }
                flat.push(v as u8);
            }
        }
        let at = |a: usize, b: usize| flat[a * order + b] as usize;
        for g in 0..order {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::InvalidTable(format!(
                    "id 0 is not an identity for {g}"
                )));
            }
        }
        let mut inverses = Vec::with_capacity(order);
        for g in 0..order {
            let inv: Vec<usize> = (0..order)
                .filter(|&h| at(g, h) == 0 && at(h, g) == 0)
                .collect();
            if inv.len() != 1 {
                return Err(Error::InvalidTable(format!(
                    "element {g} has {} inverses",
                    inv.len()
                )));
            }
            inverses.push(inv[0] as u8);
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let right_mul = RightMulTable::build(order, at);
        Ok(GroupModel {
            label: label.into(),
            kind: GroupKind::Table,
            order,
            table: Some(flat),
            inverses,
            right_mul,
        })
    }

    /// The cyclic group `Z_m` as a table group. Handy for tests and tooling.
    pub fn cyclic(m: usize) -> Result<GroupModel> {
        let table: Vec<Vec<usize>> = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        GroupModel::from_table(format!("Z{m}"), &table)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `Some(n)` for `D_2n`.
    pub fn dihedral_n(&self) -> Option<u32> {
        match self.kind {
            GroupKind::Dihedral { n } => Some(n),
            GroupKind::Table => None,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(|i| ElementId(i as u8))
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.order)
    }

    pub fn check_element(&self, id: ElementId) -> Result<()> {
        if id.index() < self.order {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                id: id.index(),
                order: self.order,
            })
        }
    }

    pub fn check_mask(&self, mask: SubsetMask) -> Result<()> {
        if mask.is_subset_of(self.full_mask()) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                id: 63 - mask.bits().leading_zeros() as usize,
                order: self.order,
            })
        }
    }

    /// `a·b`, validating both ids.
    pub fn multiply(&self, a: ElementId, b: ElementId) -> Result<ElementId> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul(a, b))
    }

    /// Unchecked product; ids must be in range.
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match (&self.table, self.kind) {
            (Some(t), _) => ElementId(t[a.index() * self.order + b.index()]),
            (None, GroupKind::Dihedral { n }) => DihedralElement::from_id(a, n)
                .mul(DihedralElement::from_id(b, n), n)
                .to_id(n),
            (None, GroupKind::Table) => unreachable!("table group without a table"),
        }
    }

    #[inline]
    pub fn inverse(&self, a: ElementId) -> ElementId {
        ElementId(self.inverses[a.index()])
    }

    /// Left-to-right product of a sequence; the empty product is the identity.
    pub fn product<I: IntoIterator<Item = ElementId>>(&self, seq: I) -> ElementId {
        seq.into_iter()
            .fold(ElementId::IDENTITY, |p, z| self.mul(p, z))
    }

    /// `{p·z : p ∈ set}` on bitsets of element ids.
    #[inline]
    pub(crate) fn right_mul_set(&self, set: u64, z: ElementId) -> u64 {
        self.right_mul.apply(set, z.index())
    }

    pub fn element_order(&self, a: ElementId) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != ElementId::IDENTITY {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|g| self.element_order(g)).fold(1, lcm)
    }

    /// Text form of an element: `r<k>` / `s<k>` for dihedral groups,
    /// `g<id>` for table groups.
    pub fn element_name(&self, id: ElementId) -> String {
        match self.kind {
            GroupKind::Dihedral { n } => {
                let e = DihedralElement::from_id(id, n);
                format!("{}{}", if e.refl { 's' } else { 'r' }, e.rot)
            }
            GroupKind::Table => format!("g{}", id.0),
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<ElementId> {
        let text = text.trim();
        let bad = || Error::ParseElement(text.to_string());
        let (tag, digits) = text.split_at_checked(1).ok_or_else(bad)?;
        let k: usize = digits.parse().map_err(|_| bad())?;
        let id = match (self.kind, tag) {
            (GroupKind::Dihedral { n }, "r") if k < n as usize => k,
            (GroupKind::Dihedral { n }, "s") if k < n as usize => k + n as usize,
            (GroupKind::Table, "g") if k < self.order => k,
            _ => return Err(bad()),
        };
        Ok(ElementId(id as u8))
    }

    /// Parses a comma- or whitespace-separated element list into a subset.
    pub fn parse_subset(&self, text: &str) -> Result<SubsetMask> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .try_fold(SubsetMask::EMPTY, |m, t| Ok(m.with(self.parse_element(t)?)))
    }

    pub fn subset_names(&self, mask: SubsetMask) -> Vec<String> {
        mask.iter().map(|g| self.element_name(g)).collect()
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
