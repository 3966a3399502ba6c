//! Permutation-product sets: the set of all products `z_π(1)···z_π(t)` of
//! the elements of a subset, over every ordering `π`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ElementId, GroupModel, SubsetMask};

/// Largest subset accepted by [`product_set`].
pub const MAX_PRODUCT_SET_INPUT: usize = 20;
/// Largest subset accepted by [`product_set_naive`].
pub const MAX_NAIVE_INPUT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSetResult {
    pub input: SubsetMask,
    pub input_size: usize,
    pub achieved: SubsetMask,
    /// One ordering of the input per achieved element.
    pub witnesses: BTreeMap<ElementId, Vec<ElementId>>,
}

impl ProductSetResult {
    pub fn len(&self) -> usize {
        self.achieved.len()
    }

    pub fn is_empty(&self) -> bool {
        self.achieved.is_empty()
    }

    pub fn contains(&self, g: ElementId) -> bool {
        self.achieved.contains(g)
    }

    /// Re-checks every witness: it must be a permutation of the input and
    /// multiply out to its key.
    pub fn verify(&self, group: &GroupModel) -> bool {
        self.witnesses.len() == self.achieved.len()
            && self.witnesses.iter().all(|(&g, order)| {
                self.achieved.contains(g)
                    && order.len() == self.input_size
                    && SubsetMask::from_ids(order.iter().copied()) == self.input
                    && group.product(order.iter().copied()) == g
            })
    }
}

fn check_input(group: &GroupModel, s: SubsetMask, limit: usize) -> Result<()> {
    group.check_mask(s)?;
    if s.is_empty() {
        return Err(Error::Domain("product set of the empty subset".into()));
    }
    if s.len() > limit {
        return Err(Error::Capacity {
            what: "subset size",
            got: s.len(),
            limit,
        });
    }
    Ok(())
}

/// `reach[m]` = bitset of products achievable by ordering the elements
/// selected by local mask `m`. Predecessors `m \ {j}` are numerically
/// smaller, so one ascending pass fills the table.
fn reach_table(group: &GroupModel, elems: &[ElementId]) -> Vec<u64> {
    let t = elems.len();
    let mut reach = vec![0u64; 1 << t];
    reach[0] = 1;
    for mask in 1usize..1 << t {
        let mut acc = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc |= group.right_mul_set(reach[mask ^ 1 << j], elems[j]);
        }
        reach[mask] = acc;
    }
    reach
}

fn reconstruct(
    group: &GroupModel,
    elems: &[ElementId],
    reach: &[u64],
    target: ElementId,
) -> Vec<ElementId> {
    let mut mask = reach.len() - 1;
    let mut cur = target;
    let mut rev = Vec::with_capacity(elems.len());
    while mask != 0 {
        let mut rest = mask;
        let mut stepped = false;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = group.mul(cur, group.inverse(elems[j]));
            if reach[mask ^ 1 << j] >> prev.0 & 1 == 1 {
                rev.push(elems[j]);
                cur = prev;
                mask ^= 1 << j;
                stepped = true;
                break;
            }
        }
        debug_assert!(stepped, "reach table inconsistent");
    }
    rev.reverse();
    rev
}

/// All products of `s` over every ordering, with one witness ordering each.
///
/// Runs a subset DP over (used elements, current product) states, so the
/// cost is `O(2^|s| · |s|)` bitset operations rather than `|s|!`.
pub fn product_set(group: &GroupModel, s: SubsetMask) -> Result<ProductSetResult> {
    check_input(group, s, MAX_PRODUCT_SET_INPUT)?;
    let elems = s.to_vec();
    let reach = reach_table(group, &elems);
    let achieved = SubsetMask(reach[reach.len() - 1]);
    let witnesses = achieved
        .iter()
        .map(|g| (g, reconstruct(group, &elems, &reach, g)))
        .collect();
    Ok(ProductSetResult {
        input: s,
        input_size: elems.len(),
        achieved,
        witnesses,
    })
}

/// The achieved set only, without witnesses.
pub fn achieved_products(group: &GroupModel, s: SubsetMask) -> Result<SubsetMask> {
    check_input(group, s, MAX_PRODUCT_SET_INPUT)?;
    let reach = reach_table(group, &s.to_vec());
    Ok(SubsetMask(reach[reach.len() - 1]))
}

/// Whether some ordering of `s` multiplies to the identity. No input checks.
pub(crate) fn identity_achievable(group: &GroupModel, s: SubsetMask) -> bool {
    let reach = reach_table(group, &s.to_vec());
    reach[reach.len() - 1] & 1 == 1
}

/// Witness ordering of `s` whose product is the identity, if one exists.
pub(crate) fn identity_witness(group: &GroupModel, s: SubsetMask) -> Option<Vec<ElementId>> {
    let elems = s.to_vec();
    let reach = reach_table(group, &elems);
    (reach[reach.len() - 1] & 1 == 1)
        .then(|| reconstruct(group, &elems, &reach, ElementId::IDENTITY))
}

/// Same contract as [`product_set`], by literal enumeration of all `|s|!`
/// orderings. The first ordering (in lexicographic order of element ids)
/// reaching each product is kept as its witness.
pub fn product_set_naive(group: &GroupModel, s: SubsetMask) -> Result<ProductSetResult> {
    check_input(group, s, MAX_NAIVE_INPUT)?;
    let elems = s.to_vec();
    let mut witnesses = BTreeMap::new();
    let mut order = Vec::with_capacity(elems.len());
    permute(
        group,
        &elems,
        0,
        ElementId::IDENTITY,
        &mut order,
        &mut witnesses,
    );
    Ok(ProductSetResult {
        input: s,
        input_size: elems.len(),
        achieved: SubsetMask::from_ids(witnesses.keys().copied()),
        witnesses,
    })
}

fn permute(
    group: &GroupModel,
    elems: &[ElementId],
    used: u32,
    acc: ElementId,
    order: &mut Vec<ElementId>,
    out: &mut BTreeMap<ElementId, Vec<ElementId>>,
) {
    if order.len() == elems.len() {
        out.entry(acc).or_insert_with(|| order.clone());
        return;
    }
    for (j, &z) in elems.iter().enumerate() {
        if used >> j & 1 == 0 {
            order.push(z);
            permute(group, elems, used | 1 << j, group.mul(acc, z), order, out);
            order.pop();
        }
    }
}
