//! The Harborth constant: the least `k` such that every `k`-subset of `G`
//! contains `exp(G)` distinct elements that multiply to the identity in
//! some order. When no such `k <= |G|` exists the value is `|G| + 1`.

use std::sync::Mutex;

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{dihedral_group, ElementId, GroupKind, GroupModel, SubsetMask};
use crate::product::{identity_achievable, identity_witness, MAX_PRODUCT_SET_INPUT};
use crate::scan::{self, Budget, BudgetTracker};
use crate::symmetry::Canonicalizer;

/// Largest group searched without symmetry reduction.
pub const MAX_BRUTE_ORDER: usize = 24;
/// Largest group searched with symmetry reduction.
pub const MAX_BRUTE_ORDER_REDUCED: usize = 32;

/// Caches "does `B` multiply to the identity in some order", keyed by mask.
/// Inserts are idempotent, so concurrent workers may race freely.
#[derive(Default)]
pub struct IdentityMemo {
    map: DashMap<u64, bool>,
}

impl IdentityMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    fn get_or_compute(&self, group: &GroupModel, b: SubsetMask) -> bool {
        if let Some(v) = self.map.get(&b.bits()) {
            return *v;
        }
        let v = identity_achievable(group, b);
        self.map.insert(b.bits(), v);
        v
    }
}

/// A subset `B ⊆ S` and an ordering of `B` whose product is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneProductWitness {
    pub subset: SubsetMask,
    pub ordering: Vec<ElementId>,
}

impl OneProductWitness {
    pub fn verify(&self, group: &GroupModel, within: SubsetMask, length: usize) -> bool {
        self.subset.is_subset_of(within)
            && self.subset.len() == length
            && self.ordering.len() == length
            && SubsetMask::from_ids(self.ordering.iter().copied()) == self.subset
            && group.product(self.ordering.iter().copied()) == ElementId::IDENTITY
    }
}

/// Reflection-count parity: in `D_2n` a product is a rotation iff it has an
/// even number of reflection factors, so odd-count candidates never reach 1.
fn parity_rules_out(group: &GroupModel, b: SubsetMask) -> bool {
    match group.kind() {
        GroupKind::Dihedral { n } => {
            let reflections = b.bits() & !((1u64 << n) - 1);
            reflections.count_ones() % 2 == 1
        }
        GroupKind::Table => false,
    }
}

/// Scatters the bits of a local mask over the set positions of `s`.
#[inline]
fn spread(local: u64, positions: &[u8]) -> u64 {
    let mut out = 0u64;
    let mut rest = local;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1u64 << positions[j];
    }
    out
}

/// First `B ⊆ s` (colex order) with `|B| = length` that reaches the identity.
fn find_one_product(
    group: &GroupModel,
    s: SubsetMask,
    length: usize,
    memo: Option<&IdentityMemo>,
) -> Result<Option<SubsetMask>> {
    let positions: Vec<u8> = s.iter().map(|e| e.0).collect();
    for local in scan::k_subsets(positions.len(), length) {
        let b = SubsetMask(spread(local, &positions));
        if parity_rules_out(group, b) {
            continue;
        }
        if length > MAX_PRODUCT_SET_INPUT {
            return Err(Error::Capacity {
                what: "one-product length",
                got: length,
                limit: MAX_PRODUCT_SET_INPUT,
            });
        }
        let hit = match memo {
            Some(m) => m.get_or_compute(group, b),
            None => identity_achievable(group, b),
        };
        if hit {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

fn check_length(s: SubsetMask, length: usize) -> Result<()> {
    if length == 0 || length > s.len() {
        return Err(Error::Domain(format!(
            "one-product length must be in 1..={}, got {length}",
            s.len()
        )));
    }
    Ok(())
}

/// A `length`-subset of `s` with an ordering multiplying to the identity, if any.
pub fn admits_one_product(
    group: &GroupModel,
    s: SubsetMask,
    length: usize,
) -> Result<Option<OneProductWitness>> {
    admits_one_product_with(group, s, length, None)
}

/// As [`admits_one_product`], sharing per-`B` results through `memo`.
pub fn admits_one_product_with(
    group: &GroupModel,
    s: SubsetMask,
    length: usize,
    memo: Option<&IdentityMemo>,
) -> Result<Option<OneProductWitness>> {
    group.check_mask(s)?;
    check_length(s, length)?;
    Ok(
        find_one_product(group, s, length, memo)?.map(|b| OneProductWitness {
            subset: b,
            ordering: identity_witness(group, b).expect("memo and DP disagree"),
        }),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UpperEvidence {
    /// Every subset at the threshold was checked (modulo symmetry).
    Exhaustive { checked_subsets: u64 },
    /// Closed form for dihedral groups.
    Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampledWitness {
    pub subset: SubsetMask,
    pub witness: OneProductWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCertificate {
    pub group_label: String,
    pub invariant_name: String,
    pub value: usize,
    /// A `(value - 1)`-subset with no qualifying one-product subsequence.
    pub lower_witness: SubsetMask,
    pub upper_evidence: UpperEvidence,
    pub per_set_witnesses_sampled: Vec<SampledWitness>,
}

impl InvariantCertificate {
    pub fn checked_subsets(&self) -> u64 {
        match self.upper_evidence {
            UpperEvidence::Exhaustive { checked_subsets } => checked_subsets,
            UpperEvidence::Formula => 0,
        }
    }

    /// Re-checks the lower witness from scratch, and each sampled witness.
    pub fn verify(&self, group: &GroupModel) -> Result<bool> {
        let exp = group.exponent();
        let lower_ok = self.lower_witness.len() + 1 == self.value
            && (self.value != group.order() + 1 || self.lower_witness == group.full_mask())
            && (self.lower_witness.len() < exp
                || find_one_product(group, self.lower_witness, exp, None)?.is_none());
        let samples_ok = self
            .per_set_witnesses_sampled
            .iter()
            .all(|s| s.subset.len() == self.value && s.witness.verify(group, s.subset, exp));
        Ok(lower_ok && samples_ok)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub jobs: usize,
    /// Only scan canonical representatives under `Aut(D_2n)`.
    pub symmetry: bool,
    pub budget: Budget,
    /// Also scan `value + 1` and require every subset to pass.
    pub check_frontier: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            jobs: 1,
            symmetry: false,
            budget: Budget::UNLIMITED,
            check_frontier: true,
        }
    }
}

const SAMPLED_WITNESSES: usize = 4;

/// Computes the Harborth constant by ascending exhaustive scan.
///
/// For each `k` from `exp(G)` upward, looks for the colex-least `k`-subset
/// admitting no one-product subsequence of length `exp(G)`. The first `k`
/// with none is the value, and the failing subset from `k - 1` is the lower
/// witness. Results do not depend on `jobs`.
pub fn harborth_bruteforce(
    group: &GroupModel,
    opts: &SearchOptions,
) -> Result<InvariantCertificate> {
    scan::check_jobs(opts.jobs)?;
    let order = group.order();
    let canon = match (opts.symmetry, group.kind()) {
        (false, _) => None,
        (true, GroupKind::Dihedral { n }) => Some(Canonicalizer::new(n)?),
        (true, GroupKind::Table) => {
            return Err(Error::Domain(
                "symmetry reduction is only available for dihedral groups".into(),
            ))
        }
    };
    let limit = if canon.is_some() {
        MAX_BRUTE_ORDER_REDUCED
    } else {
        MAX_BRUTE_ORDER
    };
    if order > limit {
        return Err(Error::Capacity {
            what: "group order for exhaustive search",
            got: order,
            limit,
        });
    }
    let exp = group.exponent();
    let memo = IdentityMemo::new();
    let tracker = BudgetTracker::new(opts.budget);
    let in_scope = |m: u64| canon.as_ref().is_none_or(|c| c.is_canonical(SubsetMask(m)));
    let failure = Mutex::new(None);
    let fails = |m: u64| match find_one_product(group, SubsetMask(m), exp, Some(&memo)) {
        Ok(b) => b.is_none(),
        Err(e) => {
            failure.lock().unwrap().get_or_insert(e);
            true
        }
    };
    let budget_error = |last: Option<usize>| Error::BudgetExhausted {
        reason: tracker.reason(),
        last_verified_k: last,
    };

    scan::with_pool(opts.jobs, || {
        // every (exp-1)-subset fails vacuously; the colex-least one stands in
        let mut lower = SubsetMask(scan::unrank_colex(0, exp - 1));
        let mut last_verified: Option<usize> = None;
        let mut checked_total = 0u64;
        let mut value = order + 1;
        for k in exp..=order {
            let hit = scan::find_first(order, k, &tracker, in_scope, fails)
                .map_err(|_| budget_error(last_verified))?;
            if let Some(e) = failure.lock().unwrap().take() {
                return Err(e);
            }
            checked_total += hit.checked;
            last_verified = Some(k);
            if hit.found {
                lower = SubsetMask(hit.mask);
            } else {
                value = k;
                break;
            }
        }
        if value == order + 1 {
            debug_assert_eq!(lower, group.full_mask());
        }

        if opts.check_frontier && value < order {
            let beyond = scan::find_first(order, value + 1, &tracker, in_scope, fails)
                .map_err(|_| budget_error(last_verified))?;
            if let Some(e) = failure.lock().unwrap().take() {
                return Err(e);
            }
            if beyond.found {
                return Err(Error::SelfCheck(format!(
                    "every {value}-subset qualifies but {:?} of size {} does not",
                    group.subset_names(SubsetMask(beyond.mask)),
                    value + 1
                )));
            }
        }
        // a proper subset of a failing set must also fail
        if lower.len() >= exp {
            for e in lower.iter() {
                let smaller = lower.without(e);
                if smaller.len() >= exp
                    && find_one_product(group, smaller, exp, Some(&memo))?.is_some()
                {
                    return Err(Error::SelfCheck(
                        "failing set has a qualifying subset".into(),
                    ));
                }
            }
        }

        let per_set_witnesses_sampled = if value <= order {
            scan::k_subsets(order, value)
                .map(SubsetMask)
                .take(SAMPLED_WITNESSES)
                .map(|a| {
                    let b = find_one_product(group, a, exp, Some(&memo))?
                        .ok_or_else(|| Error::SelfCheck("sampled subset has no witness".into()))?;
                    Ok(SampledWitness {
                        subset: a,
                        witness: OneProductWitness {
                            subset: b,
                            ordering: identity_witness(group, b).expect("memo and DP disagree"),
                        },
                    })
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };

        Ok(InvariantCertificate {
            group_label: group.label().to_string(),
            invariant_name: "harborth".into(),
            value,
            lower_witness: lower,
            upper_evidence: UpperEvidence::Exhaustive {
                checked_subsets: checked_total,
            },
            per_set_witnesses_sampled,
        })
    })
}

/// `g(D_2n)`: `n + 2` for even `n`, `2n + 1` for odd `n`.
pub fn harborth_formula(n: u32) -> Result<usize> {
    if n < 3 {
        return Err(Error::Domain(format!("n must be at least 3, got {n}")));
    }
    let n = n as usize;
    Ok(if n.is_multiple_of(2) {
        n + 2
    } else {
        2 * n + 1
    })
}

/// The extremal subset of `D_2n`: the rotations plus `x` for even `n`, the
/// whole group for odd `n`. Re-verified before it is returned.
pub fn extremal_set(n: u32) -> Result<SubsetMask> {
    let group = dihedral_group(n)?;
    let (set, length) = if n.is_multiple_of(2) {
        let rotations = SubsetMask((1u64 << n) - 1);
        (rotations.with(ElementId(n as u8)), n as usize)
    } else {
        (group.full_mask(), group.order())
    };
    if find_one_product(&group, set, length, None)?.is_some() {
        return Err(Error::SelfCheck(format!(
            "extremal set for n = {n} has a one-product subsequence"
        )));
    }
    Ok(set)
}

/// Certificate built from the closed form and the extremal set.
pub fn formula_certificate(n: u32) -> Result<InvariantCertificate> {
    let group = dihedral_group(n)?;
    Ok(InvariantCertificate {
        group_label: group.label().to_string(),
        invariant_name: "harborth".into(),
        value: harborth_formula(n)?,
        lower_witness: extremal_set(n)?,
        upper_evidence: UpperEvidence::Formula,
        per_set_witnesses_sampled: Vec::new(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkReport {
    pub n: u32,
    pub subset_size: usize,
    pub length: usize,
    pub subsets_checked: u64,
    pub passed: bool,
    pub counterexample: Option<SubsetMask>,
}

/// Largest `D_2n` order accepted by [`verify_remark_odd`].
pub const MAX_REMARK_ORDER: usize = 24;

/// For odd `n`: checks that every `(n+1)`-subset of `D_2n` has `n` distinct
/// elements multiplying to the identity in some order.
pub fn verify_remark_odd(n: u32, jobs: usize) -> Result<RemarkReport> {
    scan::check_jobs(jobs)?;
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "n must be odd and at least 3, got {n}"
        )));
    }
    let group = dihedral_group(n)?;
    if group.order() > MAX_REMARK_ORDER {
        return Err(Error::Capacity {
            what: "group order",
            got: group.order(),
            limit: MAX_REMARK_ORDER,
        });
    }
    let size = n as usize + 1;
    let length = n as usize;
    let memo = IdentityMemo::new();
    let tracker = BudgetTracker::new(Budget::UNLIMITED);
    let hit = scan::with_pool(jobs, || {
        scan::find_first(
            group.order(),
            size,
            &tracker,
            |_| true,
            |m| {
                find_one_product(&group, SubsetMask(m), length, Some(&memo))
                    .map(|b| b.is_none())
                    .unwrap_or(true)
            },
        )
    })
    .map_err(|_| Error::BudgetExhausted {
        reason: tracker.reason(),
        last_verified_k: None,
    })?;
    Ok(RemarkReport {
        n,
        subset_size: size,
        length,
        subsets_checked: hit.checked,
        passed: !hit.found,
        counterexample: hit.found.then_some(SubsetMask(hit.mask)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_plus_x_in_d8_has_no_one_product() {
        let g = dihedral_group(4).unwrap();
        let s = g.parse_subset("r0,r1,r2,r3,s0").unwrap();
        assert_eq!(admits_one_product(&g, s, 4).unwrap(), None);
    }

    #[test]
    fn d8_mixed_subset_has_witness() {
        let g = dihedral_group(4).unwrap();
        let s = g.parse_subset("s0,s1,r1,r0").unwrap();
        let w = admits_one_product(&g, s, 4).unwrap().unwrap();
        assert!(w.verify(&g, s, 4));
        // the ordering named in the docs also works
        let named: Vec<_> = ["s1", "s0", "r1", "r0"]
            .iter()
            .map(|t| g.parse_element(t).unwrap())
            .collect();
        assert_eq!(g.product(named), ElementId::IDENTITY);
    }

    #[test]
    fn d6_whole_group_has_no_full_ordering() {
        let g = dihedral_group(3).unwrap();
        assert_eq!(admits_one_product(&g, g.full_mask(), 6).unwrap(), None);
    }

    #[test]
    fn length_out_of_range() {
        let g = dihedral_group(4).unwrap();
        let s = g.parse_subset("r0,r1").unwrap();
        assert!(matches!(
            admits_one_product(&g, s, 3),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            admits_one_product(&g, s, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn formula_values() {
        assert_eq!(harborth_formula(4).unwrap(), 6);
        assert_eq!(harborth_formula(3).unwrap(), 7);
        assert_eq!(harborth_formula(10).unwrap(), 12);
        assert!(harborth_formula(2).is_err());
    }

    #[test]
    fn extremal_sets() {
        let g = dihedral_group(4).unwrap();
        assert_eq!(
            g.subset_names(extremal_set(4).unwrap()),
            ["r0", "r1", "r2", "r3", "s0"]
        );
        assert_eq!(
            extremal_set(3).unwrap(),
            dihedral_group(3).unwrap().full_mask()
        );
        assert_eq!(extremal_set(6).unwrap().len(), 7);
    }

    #[test]
    fn small_bruteforce_values() {
        let c =
            harborth_bruteforce(&dihedral_group(3).unwrap(), &SearchOptions::default()).unwrap();
        assert_eq!(c.value, 7);
        assert_eq!(c.lower_witness, SubsetMask::full(6));
        let g8 = dihedral_group(4).unwrap();
        let c = harborth_bruteforce(&g8, &SearchOptions::default()).unwrap();
        assert_eq!(c.value, 6);
        assert!(c.verify(&g8).unwrap());
        assert!(matches!(c.upper_evidence, UpperEvidence::Exhaustive { .. }));
    }

    #[test]
    fn cyclic_groups_follow_convention() {
        // exp(Z_m) = m, and the only m-subset is the whole group, which sums
        // to m(m-1)/2: zero for odd m, m/2 for even m.
        let c = harborth_bruteforce(&GroupModel::cyclic(4).unwrap(), &SearchOptions::default())
            .unwrap();
        assert_eq!(c.value, 5);
        let c = harborth_bruteforce(&GroupModel::cyclic(5).unwrap(), &SearchOptions::default())
            .unwrap();
        assert_eq!(c.value, 5);
        let c = harborth_bruteforce(&GroupModel::cyclic(1).unwrap(), &SearchOptions::default())
            .unwrap();
        assert_eq!(c.value, 1);
        assert!(c.lower_witness.is_empty());
    }

    #[test]
    fn guards() {
        let big = dihedral_group(13).unwrap();
        assert!(matches!(
            harborth_bruteforce(&big, &SearchOptions::default()),
            Err(Error::Capacity { .. })
        ));
        let z = GroupModel::cyclic(4).unwrap();
        let opts = SearchOptions {
            symmetry: true,
            ..Default::default()
        };
        assert!(matches!(
            harborth_bruteforce(&z, &opts),
            Err(Error::Domain(_))
        ));
        let opts = SearchOptions {
            jobs: 0,
            ..Default::default()
        };
        assert!(harborth_bruteforce(&z, &opts).is_err());
    }

    #[test]
    fn budget_exhaustion_reports_progress() {
        let g = dihedral_group(6).unwrap();
        let opts = SearchOptions {
            budget: Budget {
                max_subsets: Some(1000),
                max_seconds: None,
            },
            ..Default::default()
        };
        match harborth_bruteforce(&g, &opts) {
            Err(Error::BudgetExhausted {
                last_verified_k, ..
            }) => {
                assert_eq!(last_verified_k, Some(6));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn remark_small() {
        // n = 3 is a genuine exception: {1, x, xy, xy^2} has no 3-subset
        // with product 1 in any order.
        let r = verify_remark_odd(3, 1).unwrap();
        assert!(!r.passed);
        let g = dihedral_group(3).unwrap();
        assert_eq!(
            g.subset_names(r.counterexample.unwrap()),
            ["r0", "s0", "s1", "s2"]
        );
        assert_eq!(r.subsets_checked, 13);
        assert!(verify_remark_odd(5, 2).unwrap().passed);
        assert!(verify_remark_odd(4, 1).is_err());
        assert!(matches!(
            verify_remark_odd(13, 1),
            Err(Error::Capacity { .. })
        ));
    }
}
