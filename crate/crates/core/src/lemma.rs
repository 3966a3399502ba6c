//! Exhaustive checks of the size bounds for permutation-product sets of
//! reflection subsets `S = {x·y^α : α ∈ A}` of `D_2n` (n even):
//!
//! * `|A| = 2s`:   `|∏(S)| >= s`, with equality exactly on cosets of the
//!   order-`2s` subgroup of `Z_n`;
//! * `|A| = 2s+1`: `|∏(S)| >= s+1`, with equality exactly on cosets of the
//!   order-`(2s+2)` subgroup with one member removed;
//!
//! plus the covering property `|A| + |B| > n ⇒ A + B = Z_n`.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{dihedral_group, GroupModel, SubsetMask};
use crate::product::achieved_products;
use crate::residue::{matched_pairs, sumset, ResidueSet};
use crate::scan::{self, binomial};

/// Default cap on `C(n, |A|)` per invocation.
pub const MAX_LEMMA_SUBSETS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaId {
    Lemma1,
    Lemma2,
    Lemma3,
}

impl LemmaId {
    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Lemma1 => "lemma1",
            LemmaId::Lemma2 => "lemma2",
            LemmaId::Lemma3 => "lemma3",
        }
    }
}

/// Which element of the difference set `A_0` has its `n/2`-mate missing,
/// for odd-size equality instances. Reported, not used for the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistinguishedKind {
    GenericFormer,
    SpecialFormerI0,
    SpecialFormerI1,
    /// `α_{s+2} - α_3`.
    SpecialFormerPenultimate,
    /// `α_{s+2} - α_2`.
    SpecialFormerLast,
    Latter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityClassification {
    pub n: u32,
    pub subgroup_order: u32,
    /// Least member of the coset.
    pub coset_rep: u32,
    pub common_difference: u32,
    pub missing_member: Option<u32>,
    pub distinguished_kind: Option<DistinguishedKind>,
}

impl EqualityClassification {
    /// The coset, minus the missing member when there is one.
    pub fn expand(&self) -> ResidueSet {
        let mut out = ResidueSet::empty(self.n);
        for j in 0..self.subgroup_order {
            let a = (self.coset_rep + j * self.common_difference) % self.n;
            if Some(a) != self.missing_member {
                out.insert(a as i64);
            }
        }
        out
    }

    /// Position of the missing member within the coset, counted in steps of `d`.
    pub fn removal_position(&self) -> Option<u32> {
        self.missing_member
            .map(|m| (m + self.n - self.coset_rep) % self.n / self.common_difference)
    }
}

/// Classifies an equality instance as a coset (`Lemma2`) or a coset minus
/// one element (`Lemma3`) of the subgroup of `Z_n` of the matching order.
pub fn classify_equality(
    n: u32,
    alphas: &ResidueSet,
    lemma: LemmaId,
) -> Result<EqualityClassification> {
    if alphas.modulus() != n {
        return Err(Error::ModulusMismatch(alphas.modulus(), n));
    }
    let m = alphas.len() as u32;
    let subgroup_order = match lemma {
        LemmaId::Lemma2 => m,
        LemmaId::Lemma3 => m + 1,
        LemmaId::Lemma1 => {
            return Err(Error::Domain(
                "the covering lemma has no equality case".into(),
            ))
        }
    };
    if m == 0 || !n.is_multiple_of(subgroup_order) {
        return Err(Error::Structural(format!(
            "{alphas}: subgroup order {subgroup_order} does not divide {n}"
        )));
    }
    let d = n / subgroup_order;
    let rep = alphas.iter().next().unwrap_or(0) % d;
    if let Some(a) = alphas.iter().find(|a| a % d != rep) {
        return Err(Error::Structural(format!(
            "{alphas}: {a} is not in the coset {rep} + <{d}>"
        )));
    }
    let missing_member = match lemma {
        LemmaId::Lemma3 => (0..subgroup_order)
            .map(|j| rep + j * d)
            .find(|a| !alphas.contains(*a)),
        _ => None,
    };
    let distinguished_kind = match lemma {
        LemmaId::Lemma3 if n.is_multiple_of(2) => distinguished_kind(n, alphas),
        _ => None,
    };
    Ok(EqualityClassification {
        n,
        subgroup_order,
        coset_rep: rep,
        common_difference: d,
        missing_member,
        distinguished_kind,
    })
}

/// Builds `A_0 = {α_{s+2} - α_{s+2-i} : 0 <= i <= s} ∪ {α_{s+2+i} - α_1 : 1 <= i <= s-1}`
/// ∪ `{α_{s+2} - α_1}` from the sorted exponents and finds its unique member
/// whose `n/2`-mate is absent.
fn distinguished_kind(n: u32, alphas: &ResidueSet) -> Option<DistinguishedKind> {
    let a = alphas.to_vec();
    if a.len() < 3 || a.len().is_multiple_of(2) {
        return None;
    }
    let s = (a.len() - 1) / 2;
    // 1-based α_i is a[i - 1]
    let alpha = |i: usize| a[i - 1] as i64;
    let mut listing: Vec<(i64, Option<usize>)> = (0..=s)
        .map(|i| (alpha(s + 2) - alpha(s + 2 - i), Some(i)))
        .collect();
    listing.extend((0..s).map(|i| (alpha(s + 2 + i) - alpha(1), None)));
    let a0 = ResidueSet::new(n, listing.iter().map(|&(v, _)| v)).ok()?;
    let report = matched_pairs(&a0).ok()?;
    let [lonely] = report.unmatched.as_slice() else {
        return None;
    };
    let (_, former) = listing
        .iter()
        .find(|&&(v, _)| v.rem_euclid(n as i64) as u32 == *lonely)?;
    Some(match *former {
        Some(0) => DistinguishedKind::SpecialFormerI0,
        Some(1) => DistinguishedKind::SpecialFormerI1,
        Some(i) if i == s => DistinguishedKind::SpecialFormerLast,
        Some(i) if i + 1 == s => DistinguishedKind::SpecialFormerPenultimate,
        Some(_) => DistinguishedKind::GenericFormer,
        None => DistinguishedKind::Latter,
    })
}

/// Cyclic gaps between consecutive members: all `d` except one `2d`.
pub fn single_double_gap(alphas: &ResidueSet, d: u32) -> bool {
    let a = alphas.to_vec();
    let n = alphas.modulus();
    if a.is_empty() {
        return false;
    }
    let gaps: Vec<u32> = (0..a.len())
        .map(|i| (a[(i + 1) % a.len()] + n - a[i]) % n)
        .collect();
    let gaps: Vec<u32> = gaps
        .into_iter()
        .map(|g| if g == 0 { n } else { g })
        .collect();
    gaps.iter().filter(|&&g| g == 2 * d).count() == 1 && gaps.iter().all(|&g| g == d || g == 2 * d)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundViolation {
    pub exponents: Vec<u32>,
    /// Second set, for the covering lemma.
    pub other: Option<Vec<u32>>,
    pub observed: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityInstance {
    pub exponents: Vec<u32>,
    pub classification: EqualityClassification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub n: u32,
    pub s: Option<u32>,
    pub subsets_checked: u64,
    /// Lower bound being checked (`s`, `s + 1`, or `n` for covering).
    pub bound: usize,
    pub min_observed: Option<usize>,
    pub bound_violations: Vec<BoundViolation>,
    /// Total sets attaining the bound, classified or not.
    pub equality_count: u64,
    pub equality_instances: Vec<EqualityInstance>,
    pub predicted_equality_count: u64,
    /// Sets attaining the bound that are not of the predicted shape.
    pub unclassified: Vec<Vec<u32>>,
    /// Predicted-shape sets that do not attain the bound.
    pub family_not_attaining: Vec<Vec<u32>>,
    /// Odd-size instances whose gap profile is not "all d, one 2d".
    pub gap_failures: Vec<Vec<u32>>,
    /// Removal positions in `0..subgroup_order` never seen among instances.
    pub removal_positions_missing: Vec<u32>,
    pub passed: bool,
}

impl LemmaReport {
    fn finish(mut self) -> Self {
        self.bound_violations.sort();
        self.equality_instances
            .sort_by(|a, b| a.exponents.cmp(&b.exponents));
        self.unclassified.sort();
        self.family_not_attaining.sort();
        self.gap_failures.sort();
        self.passed = self.bound_violations.is_empty()
            && self.unclassified.is_empty()
            && self.family_not_attaining.is_empty()
            && self.gap_failures.is_empty()
            && self.removal_positions_missing.is_empty()
            && self.equality_count == self.predicted_equality_count;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaOptions {
    pub jobs: usize,
    /// Enumerate only sets containing 0 and expand results by translation.
    pub quotient_translation: bool,
    /// Lift the [`MAX_LEMMA_SUBSETS`] guard.
    pub force: bool,
}

impl Default for LemmaOptions {
    fn default() -> Self {
        LemmaOptions {
            jobs: 1,
            quotient_translation: false,
            force: false,
        }
    }
}

/// `|∏(S)|` for `S = {x·y^α : α ∈ alphas}` in `D_2n`.
pub fn reflection_product_size(group: &GroupModel, alphas_bits: u64) -> Result<usize> {
    let n = group
        .dihedral_n()
        .ok_or_else(|| Error::Domain("not a dihedral group".into()))?;
    Ok(achieved_products(group, SubsetMask(alphas_bits << n))?.len())
}

fn translate_bits(bits: u64, c: u32, n: u32) -> u64 {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    ((bits << c) | (bits >> (n - c))) & full
}

fn bits_to_vec(bits: u64) -> Vec<u32> {
    SubsetMask(bits).iter().map(|e| e.0 as u32).collect()
}

/// The predicted equality family: cosets (`missing = false`) or cosets minus
/// one element (`missing = true`) of the order-`order` subgroup of `Z_n`.
fn predicted_family(n: u32, order: u32, missing: bool) -> Vec<u64> {
    if order == 0 || !n.is_multiple_of(order) {
        return Vec::new();
    }
    let d = n / order;
    let mut out = Vec::new();
    for rep in 0..d {
        let coset: u64 = (0..order).fold(0, |m, j| m | 1u64 << (rep + j * d));
        if missing {
            out.extend((0..order).map(|j| coset & !(1u64 << (rep + j * d))));
        } else {
            out.push(coset);
        }
    }
    out.sort_unstable();
    out
}

struct ReflectionRun {
    lemma: LemmaId,
    n: u32,
    s: u32,
    size: usize,
    bound: usize,
    subgroup_order: u32,
}

fn check_even_params(
    lemma: LemmaId,
    n: u32,
    s: u32,
    size: usize,
    opts: &LemmaOptions,
) -> Result<GroupModel> {
    scan::check_jobs(opts.jobs)?;
    if !n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "{} needs even n, got {n}",
            lemma.name()
        )));
    }
    let min_s = if lemma == LemmaId::Lemma2 { 2 } else { 1 };
    if s < min_s {
        return Err(Error::Domain(format!(
            "{} needs s >= {min_s}, got {s}",
            lemma.name()
        )));
    }
    if size > n as usize {
        return Err(Error::Domain(format!("subset size {size} exceeds n = {n}")));
    }
    let group = dihedral_group(n)?;
    let count = binomial(n as usize, size);
    if !opts.force && count > MAX_LEMMA_SUBSETS {
        return Err(Error::Capacity {
            what: "subsets to enumerate (pass force to override)",
            got: count as usize,
            limit: MAX_LEMMA_SUBSETS as usize,
        });
    }
    Ok(group)
}

fn run_reflection_lemma(
    group: &GroupModel,
    run: ReflectionRun,
    opts: &LemmaOptions,
) -> Result<LemmaReport> {
    let ReflectionRun {
        lemma,
        n,
        s,
        size,
        bound,
        subgroup_order,
    } = run;

    if opts.quotient_translation {
        // pretest: translation must preserve |∏(S)|
        for bits in scan::k_subsets(n as usize, size).take(16) {
            let base = reflection_product_size(group, bits)?;
            for c in 1..n {
                if reflection_product_size(group, translate_bits(bits, c, n))? != base {
                    return Err(Error::SelfCheck(format!(
                        "translation by {c} changes |prod| for {:?}",
                        bits_to_vec(bits)
                    )));
                }
            }
        }
    }

    let in_scope = |bits: u64| !opts.quotient_translation || bits & 1 == 1;
    let (sized, checked) = scan::with_pool(opts.jobs, || {
        scan::collect_all(n as usize, size, in_scope, |bits| {
            Some(reflection_product_size(group, bits).map(|k| (bits, k)))
        })
    });
    let sized = sized.into_iter().collect::<Result<Vec<_>>>()?;

    let min_observed = sized.iter().map(|&(_, k)| k).min();
    let mut violations = BTreeSet::new();
    let mut equal = BTreeSet::new();
    for &(bits, k) in &sized {
        let orbit: Vec<u64> = if opts.quotient_translation {
            (0..n).map(|c| translate_bits(bits, c, n)).collect()
        } else {
            vec![bits]
        };
        if k < bound {
            violations.extend(orbit.iter().map(|&b| (b, k)));
        } else if k == bound {
            equal.extend(orbit);
        }
    }

    let mut report = LemmaReport {
        lemma,
        n,
        s: Some(s),
        subsets_checked: checked,
        bound,
        min_observed,
        bound_violations: violations
            .into_iter()
            .map(|(b, k)| BoundViolation {
                exponents: bits_to_vec(b),
                other: None,
                observed: k,
                bound,
            })
            .collect(),
        equality_count: equal.len() as u64,
        equality_instances: Vec::new(),
        predicted_equality_count: 0,
        unclassified: Vec::new(),
        family_not_attaining: Vec::new(),
        gap_failures: Vec::new(),
        removal_positions_missing: Vec::new(),
        passed: false,
    };

    let missing = lemma == LemmaId::Lemma3;
    let family = predicted_family(n, subgroup_order, missing);
    report.predicted_equality_count = family.len() as u64;

    let mut positions_seen = BTreeSet::new();
    for &bits in &equal {
        let alphas = ResidueSet::from_bits(n, bits);
        match classify_equality(n, &alphas, lemma) {
            Ok(c) if c.expand() == alphas => {
                if missing && !single_double_gap(&alphas, c.common_difference) {
                    report.gap_failures.push(alphas.to_vec());
                }
                positions_seen.extend(c.removal_position());
                report.equality_instances.push(EqualityInstance {
                    exponents: alphas.to_vec(),
                    classification: c,
                });
            }
            _ => report.unclassified.push(alphas.to_vec()),
        }
    }

    // converse: every predicted set attains the bound, computed directly
    for &bits in &family {
        if reflection_product_size(group, bits)? != bound {
            report.family_not_attaining.push(bits_to_vec(bits));
        }
    }

    if missing && !family.is_empty() {
        report.removal_positions_missing = (0..subgroup_order)
            .filter(|p| !positions_seen.contains(p))
            .collect();
    }
    Ok(report.finish())
}

/// Exhaustive check over all `2s`-subsets of `Z_n`.
pub fn verify_lemma2(n: u32, s: u32, opts: &LemmaOptions) -> Result<LemmaReport> {
    let size = 2 * s as usize;
    let group = check_even_params(LemmaId::Lemma2, n, s, size, opts)?;
    run_reflection_lemma(
        &group,
        ReflectionRun {
            lemma: LemmaId::Lemma2,
            n,
            s,
            size,
            bound: s as usize,
            subgroup_order: 2 * s,
        },
        opts,
    )
}

/// Exhaustive check over all `(2s+1)`-subsets of `Z_n`.
pub fn verify_lemma3(n: u32, s: u32, opts: &LemmaOptions) -> Result<LemmaReport> {
    let size = 2 * s as usize + 1;
    let group = check_even_params(LemmaId::Lemma3, n, s, size, opts)?;
    run_reflection_lemma(
        &group,
        ReflectionRun {
            lemma: LemmaId::Lemma3,
            n,
            s,
            size,
            bound: s as usize + 1,
            subgroup_order: 2 * s + 2,
        },
        opts,
    )
}

/// Largest modulus for exhaustive covering checks.
pub const MAX_EXHAUSTIVE_LEMMA1: u32 = 8;

/// Checks `|A| + |B| >= n + 1 ⇒ A + B = Z_n`: exhaustively for `n <= 8`,
/// then on `trials` random pairs drawn from a seeded generator.
pub fn verify_lemma1(n: u32, trials: u64, seed: u64) -> Result<LemmaReport> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let mut checked = 0u64;
    let mut violations = Vec::new();
    let mut min_observed: Option<usize> = None;
    let mut check = |a: ResidueSet, b: ResidueSet| -> Result<()> {
        let sum = sumset(&a, &b)?;
        checked += 1;
        min_observed = Some(min_observed.map_or(sum.len(), |m| m.min(sum.len())));
        if !sum.is_full() {
            violations.push(BoundViolation {
                exponents: a.to_vec(),
                other: Some(b.to_vec()),
                observed: sum.len(),
                bound: n as usize,
            });
        }
        Ok(())
    };
    if n <= MAX_EXHAUSTIVE_LEMMA1 {
        let subsets: Vec<u64> = (1u64..1 << n).collect();
        for &a in &subsets {
            for &b in &subsets {
                if a.count_ones() + b.count_ones() > n {
                    check(ResidueSet::from_bits(n, a), ResidueSet::from_bits(n, b))?;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let size_a = rng.random_range(1..=n as usize);
        let size_b = rng.random_range(n as usize + 1 - size_a..=n as usize);
        let a = ResidueSet::new(
            n,
            sample(&mut rng, n as usize, size_a)
                .into_iter()
                .map(|i| i as i64),
        )?;
        let b = ResidueSet::new(
            n,
            sample(&mut rng, n as usize, size_b)
                .into_iter()
                .map(|i| i as i64),
        )?;
        check(a, b)?;
    }
    let report = LemmaReport {
        lemma: LemmaId::Lemma1,
        n,
        s: None,
        subsets_checked: checked,
        bound: n as usize,
        min_observed,
        bound_violations: violations,
        equality_count: 0,
        equality_instances: Vec::new(),
        predicted_equality_count: 0,
        unclassified: Vec::new(),
        family_not_attaining: Vec::new(),
        gap_failures: Vec::new(),
        removal_positions_missing: Vec::new(),
        passed: false,
    };
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(n: u32, v: &[i64]) -> ResidueSet {
        ResidueSet::new(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = classify_equality(8, &rs(8, &[0, 2, 4, 6]), LemmaId::Lemma2).unwrap();
        assert_eq!(
            (
                c.subgroup_order,
                c.common_difference,
                c.coset_rep,
                c.missing_member
            ),
            (4, 2, 0, None)
        );
        let c = classify_equality(8, &rs(8, &[1, 3, 7]), LemmaId::Lemma3).unwrap();
        assert_eq!(
            (
                c.subgroup_order,
                c.common_difference,
                c.coset_rep,
                c.missing_member
            ),
            (4, 2, 1, Some(5))
        );
        assert_eq!(c.expand(), rs(8, &[1, 3, 7]));
        assert_eq!(c.removal_position(), Some(2));
        assert!(matches!(
            classify_equality(8, &rs(8, &[0, 1, 2]), LemmaId::Lemma3),
            Err(Error::Structural(_))
        ));
        assert!(matches!(
            classify_equality(6, &rs(6, &[0, 1, 2, 3]), LemmaId::Lemma2),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn gap_profile() {
        assert!(single_double_gap(&rs(8, &[1, 3, 7]), 2));
        assert!(single_double_gap(&rs(12, &[0, 2, 4, 8, 10]), 2));
        assert!(!single_double_gap(&rs(12, &[0, 2, 4, 6, 8, 10]), 2));
        assert!(!single_double_gap(&rs(8, &[0, 1, 4]), 2));
    }

    #[test]
    fn distinguished_kinds_cover_taxonomy() {
        // n = 16, s = 3: cosets of <2> minus one element
        let mut kinds = BTreeSet::new();
        for missing in 0..8u32 {
            let a: Vec<i64> = (0..8)
                .filter(|&j| j != missing)
                .map(|j| 2 * j as i64)
                .collect();
            let c = classify_equality(16, &rs(16, &a), LemmaId::Lemma3).unwrap();
            kinds.insert(format!("{:?}", c.distinguished_kind.unwrap()));
        }
        assert!(kinds.contains("Latter"));
        assert!(kinds.contains("SpecialFormerI0"));
    }

    #[test]
    fn lemma2_n8_s2() {
        let r = verify_lemma2(8, 2, &LemmaOptions::default()).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.subsets_checked, 70);
        assert_eq!(r.min_observed, Some(2));
        let sets: Vec<_> = r
            .equality_instances
            .iter()
            .map(|e| e.exponents.clone())
            .collect();
        assert_eq!(sets, vec![vec![0, 2, 4, 6], vec![1, 3, 5, 7]]);
    }

    #[test]
    fn lemma2_n6_s2_has_no_equality() {
        let r = verify_lemma2(6, 2, &LemmaOptions::default()).unwrap();
        assert!(r.passed);
        assert_eq!(r.equality_count, 0);
        assert!(r.min_observed.unwrap() >= 3);
    }

    #[test]
    fn lemma3_n12_s2() {
        let r = verify_lemma3(12, 2, &LemmaOptions::default()).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.subsets_checked, 792);
        assert_eq!(r.equality_count, 12);
    }

    #[test]
    fn lemma3_small_s_breaks_structure() {
        // For s = 1 any 3-set containing a pair {u, u + n/2} attains s + 1.
        let r = verify_lemma3(8, 1, &LemmaOptions::default()).unwrap();
        assert!(r.bound_violations.is_empty());
        assert_eq!(r.equality_count, 24);
        assert_eq!(r.equality_instances.len(), 8);
        assert!(r.unclassified.contains(&vec![0, 1, 4]));
        assert!(!r.passed);
    }

    #[test]
    fn quotient_mode_agrees() {
        for (n, s) in [(8, 2), (12, 3)] {
            let full = verify_lemma2(n, s, &LemmaOptions::default()).unwrap();
            let quot = verify_lemma2(
                n,
                s,
                &LemmaOptions {
                    quotient_translation: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(quot.subsets_checked < full.subsets_checked);
            assert_eq!(quot.equality_instances, full.equality_instances);
            assert_eq!(quot.passed, full.passed);
        }
        let full = verify_lemma3(8, 3, &LemmaOptions::default()).unwrap();
        let quot = verify_lemma3(
            8,
            3,
            &LemmaOptions {
                quotient_translation: true,
                jobs: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(quot.equality_instances, full.equality_instances);
    }

    #[test]
    fn parameter_errors() {
        let o = LemmaOptions::default();
        assert!(matches!(verify_lemma2(7, 2, &o), Err(Error::Domain(_))));
        assert!(matches!(verify_lemma2(8, 1, &o), Err(Error::Domain(_))));
        assert!(matches!(verify_lemma2(8, 5, &o), Err(Error::Domain(_))));
        assert!(matches!(verify_lemma3(9, 1, &o), Err(Error::Domain(_))));
        assert!(matches!(
            verify_lemma3(32, 7, &o),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn lemma1_small() {
        let r = verify_lemma1(5, 0, 0).unwrap();
        assert!(r.passed);
        assert!(r.subsets_checked > 0);
        let r = verify_lemma1(1, 3, 0).unwrap();
        assert!(r.passed);
        assert_eq!(
            verify_lemma1(16, 50, 7).unwrap(),
            verify_lemma1(16, 50, 7).unwrap()
        );
    }
}
