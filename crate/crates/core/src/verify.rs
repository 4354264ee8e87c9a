//! Randomized self-verification sweeps.
//!
//! Every closed-form quantity in this crate has an independent check: counts
//! against the enumeration oracle, generating functions against summed
//! tiling weights, ratio identities against the counts they relate, and the
//! two underlying algebraic lemmas (the Schur four-factor ratio and the
//! symmetric union-cancellation) as bare identities on random sets.
//!
//! Sweeps are reproducible: a seed fully determines every case, and each
//! suite draws from its own stream so adding cases to one suite does not
//! perturb another. Failures carry the offending input as a descriptor so
//! they can be replayed directly.

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::descriptors::{Region, RegionDescriptor, ShuffleDescriptor};
use crate::exact_arith::{QLaurentRatio, QPolynomial};
use crate::formulas::{
    clp_count, delta1, delta1_q, delta2, delta2_q, hex_count, hex_count_q, hyperfactorial,
    schur_principal, sym_count,
};
use crate::oracle;
use crate::regions::{reflect_set, DentSet, DentedHexagon, Trapezoid};
use crate::shuffle::ShuffleInstance;

/// Deliberate defects for testing that the sweeps can actually fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FaultInjection {
    #[default]
    None,
    /// Negate the exponent shift in the weighted ratio check.
    AlphaSignFlip,
}

/// Parameters of a verification run.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Bound on region size: `m + n` for trapezoids, `a + b` and `b + c`
    /// for hexagons.
    pub max_size: u32,
    pub seed: u64,
    /// Randomized cases per suite.
    pub cases: u64,
    pub fault: FaultInjection,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_size: 4,
            seed: 0,
            cases: 100,
            fault: FaultInjection::None,
        }
    }
}

/// A reproducible counterexample: the input as a descriptor plus what went
/// wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub case: serde_json::Value,
    pub detail: String,
}

/// Outcome of one property suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases_run: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<CaseFailure>,
}

/// Outcome of a whole verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub max_size: u32,
    pub requested_cases: u64,
    pub all_passed: bool,
    pub suites: Vec<SuiteReport>,
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A uniform random `size`-subset of `[k]`.
fn random_subset(rng: &mut ChaCha8Rng, k: u32, size: u32) -> DentSet {
    let picked = sample(rng, k as usize, size as usize);
    DentSet::from_unsorted(picked.into_iter().map(|i| i as u32 + 1))
        .expect("sampled indices are distinct and shifted to be positive")
}

fn random_trapezoid(rng: &mut ChaCha8Rng, max_size: u32) -> Trapezoid {
    let total = rng.gen_range(0..=max_size);
    let rows = rng.gen_range(0..=total);
    let dents = random_subset(rng, total, rows);
    Trapezoid::new(total - rows, rows, dents).expect("|S| = n and max(S) <= m+n by construction")
}

fn random_hexagon(rng: &mut ChaCha8Rng, max_size: u32) -> Option<DentedHexagon> {
    for _ in 0..128 {
        let ab = rng.gen_range(0..=max_size);
        let b = rng.gen_range(0..=ab);
        let c = rng.gen_range(0..=ab.min(max_size - b));
        let slack = rng.gen_range(0..=b.min(c));
        let x = random_subset(rng, ab, b - slack);
        let y = random_subset(rng, ab, c - slack);
        if let Ok(h) = DentedHexagon::new(ab - b, b, c, x, y) {
            return Some(h);
        }
    }
    None
}

fn random_symmetric_hexagon(rng: &mut ChaCha8Rng, max_size: u32) -> Option<DentedHexagon> {
    for _ in 0..128 {
        let b = rng.gen_range(0..=max_size / 2);
        let a = rng.gen_range(0..=max_size - b);
        let x_size = rng.gen_range(0..=b);
        let x = random_subset(rng, a + b, x_size);
        let y = reflect_set(&x, a + b).expect("x is within [a+b]");
        if let Ok(h) = DentedHexagon::new(a, b, b, x, y) {
            return Some(h);
        }
    }
    None
}

/// Random side reassignment preserving union and intersection.
fn random_reassignment(rng: &mut ChaCha8Rng, x: &DentSet, y: &DentSet) -> (DentSet, DentSet) {
    let intersection = x.intersection(y);
    let mut xp: Vec<u32> = intersection.iter().collect();
    let mut yp: Vec<u32> = intersection.iter().collect();
    for p in x.union(y).difference(&intersection).iter() {
        if rng.gen_bool(0.5) {
            xp.push(p);
        } else {
            yp.push(p);
        }
    }
    (
        DentSet::from_unsorted(xp).expect("distinct by construction"),
        DentSet::from_unsorted(yp).expect("distinct by construction"),
    )
}

/// Random `k`-symmetric side reassignment: the singly-dented positions come
/// in reflection pairs `{p, k+1-p}`, and each pair either stays or swaps.
fn random_symmetric_flip(rng: &mut ChaCha8Rng, x: &DentSet, k: u32) -> DentSet {
    let y = reflect_set(x, k).expect("x is within [k]");
    let intersection = x.intersection(&y);
    let mut xp: Vec<u32> = intersection.iter().collect();
    for p in x.difference(&intersection).iter() {
        xp.push(if rng.gen_bool(0.5) { p } else { k + 1 - p });
    }
    DentSet::from_unsorted(xp).expect("reflections of distinct singles stay distinct")
}

fn random_shuffle(rng: &mut ChaCha8Rng, h: DentedHexagon) -> ShuffleInstance {
    let (xp, yp) = random_reassignment(rng, h.x(), h.y());
    ShuffleInstance::new(h, xp, yp).expect("reassignment preserves union and intersection")
}

fn region_case(region: &Region) -> serde_json::Value {
    serde_json::to_value(RegionDescriptor::from_region(region)).expect("descriptors serialize")
}

fn shuffle_case(s: &ShuffleInstance) -> serde_json::Value {
    serde_json::to_value(ShuffleDescriptor {
        source: RegionDescriptor::from_region(&Region::Hexagon(s.source().clone())),
        xp: s.target().x().iter().collect(),
        yp: s.target().y().iter().collect(),
    })
    .expect("descriptors serialize")
}

fn run_suite(
    name: &str,
    cases: u64,
    mut case: impl FnMut(u64) -> Result<(), CaseFailure>,
) -> SuiteReport {
    for i in 0..cases {
        if let Err(failure) = case(i) {
            return SuiteReport {
                suite: name.to_string(),
                cases_run: i + 1,
                passed: false,
                failure: Some(failure),
            };
        }
    }
    SuiteReport {
        suite: name.to_string(),
        cases_run: cases,
        passed: true,
        failure: None,
    }
}

/// The shuffle pair used as a deterministic first case of the ratio suites,
/// so a broken ratio is caught even with very few random cases.
fn pinned_shuffle() -> ShuffleInstance {
    let h = DentedHexagon::new(
        3,
        8,
        4,
        DentSet::new(vec![2, 3, 5, 8, 9, 11]).unwrap(),
        DentSet::new(vec![3, 7]).unwrap(),
    )
    .unwrap();
    ShuffleInstance::new(
        h,
        DentSet::new(vec![3, 7, 9]).unwrap(),
        DentSet::new(vec![2, 3, 5, 8, 11]).unwrap(),
    )
    .unwrap()
}

fn suite_trapezoid_count(config: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(config.seed, 1);
    run_suite("trapezoid-count", config.cases, |_| {
        let t = random_trapezoid(&mut rng, config.max_size);
        let formula = clp_count(&t);
        let counted = oracle::count_tilings(&t.build_cells());
        if formula == counted {
            Ok(())
        } else {
            Err(CaseFailure {
                case: region_case(&Region::Trapezoid(t)),
                detail: format!("closed form {formula} != enumerated {counted}"),
            })
        }
    })
}

fn suite_hexagon_count(config: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(config.seed, 2);
    run_suite("hexagon-count", config.cases, |_| {
        let Some(h) = random_hexagon(&mut rng, config.max_size) else {
            return Ok(());
        };
        let formula = hex_count(&h);
        let counted = oracle::count_tilings(&h.build_cells());
        if formula == counted {
            Ok(())
        } else {
            Err(CaseFailure {
                case: region_case(&Region::Hexagon(h)),
                detail: format!("closed form {formula} != enumerated {counted}"),
            })
        }
    })
}

fn suite_hexagon_gf(config: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(config.seed, 3);
    run_suite("hexagon-gf", config.cases, |_| {
        let Some(h) = random_hexagon(&mut rng, config.max_size) else {
            return Ok(());
        };
        let formula = hex_count_q(&h);
        let summed = oracle::generating_function_q(&h.build_cells());
        if formula != summed {
            return Err(CaseFailure {
                case: region_case(&Region::Hexagon(h)),
                detail: format!(
                    "generating function {:?} != enumerated {:?}",
                    formula.coeff_strings(),
                    summed.coeff_strings()
                ),
            });
        }
        if formula.evaluate_at_one() != hex_count(&h) {
            return Err(CaseFailure {
                case: region_case(&Region::Hexagon(h)),
                detail: "generating function at q=1 disagrees with the plain count".to_string(),
            });
        }
        Ok(())
    })
}

fn suite_symmetric_count(config: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(config.seed, 4);
    run_suite("symmetric-count", config.cases, |_| {
        let Some(h) = random_symmetric_hexagon(&mut rng, config.max_size) else {
            return Ok(());
        };
        let formula = sym_count(&h).expect("region is centrally symmetric");
        let halved =
            oracle::count_symmetric_via_upper_half(&h).expect("region is centrally symmetric");
        if formula != halved {
            return Err(CaseFailure {
                case: region_case(&Region::Hexagon(h)),
                detail: format!("closed form {formula} != diagonal-split count {halved}"),
            });
        }
        let grid = h.build_cells();
        if grid.num_cells() <= 40 {
            let fixed =
                oracle::count_symmetric_tilings(&grid).expect("region is centrally symmetric");
            if formula != fixed {
                return Err(CaseFailure {
                    case: region_case(&Region::Hexagon(h)),
                    detail: format!("closed form {formula} != rotation-fixed count {fixed}"),
                });
            }
        }
        Ok(())
    })
}

fn suite_delta_factorization(config: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(config.seed, 5);
    run_suite("delta-factorization", config.cases, |_| {
        let s_size = rng.gen_range(0..=4);
        let s = random_subset(&mut rng, 20, s_size);
        let rest: Vec<u32> = (1..=20).filter(|p| !s.contains(*p)).collect();
        let t_size = rng.gen_range(0..=4usize.min(rest.len()));
        let t = DentSet::from_unsorted(
            sample(&mut rng, rest.len(), t_size)
                .into_iter()
                .map(|i| rest[i]),
        )
        .expect("subset of distinct positions");
        let case =
            || json!({ "S": s.iter().collect::<Vec<_>>(), "T": t.iter().collect::<Vec<_>>() });
        let union = s.union(&t);
        let bridge = delta2(&s, &t).expect("disjoint by construction");
        if delta1(&union) != delta1(&s) * &bridge * delta1(&t) {
            return Err(CaseFailure {
                case: case(),
                detail: "difference-product factorization failed".to_string(),
            });
        }
        let bridge_q = delta2_q(&s, &t).expect("disjoint by construction");
        if delta1_q(&union) != &(&delta1_q(&s) * &bridge_q) * &delta1_q(&t) {
            return Err(CaseFailure {
                case: case(),
                detail: "q-difference-product factorization failed".to_string(),
            });
        }
        Ok(())
    })
}

fn suite_shuffle_count_ratio(config: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(config.seed, 6);
    run_suite("shuffle-count-ratio", config.cases, |i| {
        let s = if i == 0 {
            pinned_shuffle()
        } else {
            match random_hexagon(&mut rng, config.max_size) {
                Some(h) => random_shuffle(&mut rng, h),
                None => return Ok(()),
            }
        };
        // Cross-multiplied form of the count ratio, so nothing divides.
        let lhs = hex_count(s.target())
            * hyperfactorial(s.target().b())
            * hyperfactorial(s.target().c())
            * delta1(s.source().x())
            * delta1(s.source().y());
        let rhs = hex_count(s.source())
            * hyperfactorial(s.source().b())
            * hyperfactorial(s.source().c())
            * delta1(s.target().x())
            * delta1(s.target().y());
        if lhs == rhs {
            Ok(())
        } else {
            Err(CaseFailure {
                case: shuffle_case(&s),
                detail: "cross-multiplied count ratio identity failed".to_string(),
            })
        }
    })
}

fn suite_shuffle_weighted_ratio(config: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(config.seed, 7);
    run_suite("shuffle-weighted-ratio", config.cases, |i| {
        let s = if i == 0 {
            pinned_shuffle()
        } else {
            match random_hexagon(&mut rng, config.max_size) {
                Some(h) => random_shuffle(&mut rng, h),
                None => return Ok(()),
            }
        };
        let mut ratio = s.ratio_weighted();
        if config.fault == FaultInjection::AlphaSignFlip {
            ratio = QLaurentRatio::new(
                ratio.shift() - 2 * s.alpha_shift(),
                ratio.numerator().clone(),
                ratio.denominator().clone(),
            )
            .expect("denominator unchanged");
        }
        let expected = QLaurentRatio::new(0, hex_count_q(s.target()), hex_count_q(s.source()))
            .expect("valid regions have at least one tiling");
        if ratio == expected {
            Ok(())
        } else {
            Err(CaseFailure {
                case: shuffle_case(&s),
                detail: format!(
                    "weighted ratio with exponent shift {} disagrees with the generating functions",
                    ratio.shift()
                ),
            })
        }
    })
}

fn suite_shuffle_symmetric_ratio(config: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(config.seed, 8);
    run_suite("shuffle-symmetric-ratio", config.cases, |_| {
        let Some(h) = random_symmetric_hexagon(&mut rng, config.max_size) else {
            return Ok(());
        };
        let k = h.a() + h.b();
        let xp = random_symmetric_flip(&mut rng, h.x(), k);
        let yp = reflect_set(&xp, k).expect("xp is within [k]");
        let s = ShuffleInstance::new(h, xp, yp)
            .expect("symmetric flips preserve union and intersection");
        let r = s
            .ratio_symmetric()
            .expect("both regions symmetric by construction");
        if &r * &r != s.ratio_unweighted() {
            return Err(CaseFailure {
                case: shuffle_case(&s),
                detail: "squared symmetric ratio differs from the plain ratio".to_string(),
            });
        }
        let lhs = sym_count(s.target()).expect("symmetric") * delta1(s.source().x());
        let rhs = sym_count(s.source()).expect("symmetric") * delta1(s.target().x());
        if lhs == rhs {
            Ok(())
        } else {
            Err(CaseFailure {
                case: shuffle_case(&s),
                detail: "cross-multiplied symmetric count ratio identity failed".to_string(),
            })
        }
    })
}

fn suite_memo_consistency(config: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(config.seed, 9);
    let size = config.max_size.min(4);
    run_suite("memo-consistency", config.cases, |_| {
        let region = if rng.gen_bool(0.5) {
            Region::Trapezoid(random_trapezoid(&mut rng, size))
        } else {
            match random_hexagon(&mut rng, size) {
                Some(h) => Region::Hexagon(h),
                None => return Ok(()),
            }
        };
        let grid = region.build_cells();
        if grid.num_cells() > 32 {
            return Ok(());
        }
        let listed = oracle::enumerate_tilings(&grid);
        if BigInt::from(listed.len()) != oracle::count_tilings(&grid) {
            return Err(CaseFailure {
                case: region_case(&region),
                detail: "memoized count differs from explicit enumeration".to_string(),
            });
        }
        let summed = listed
            .iter()
            .map(oracle::tiling_weight_q)
            .fold(QPolynomial::zero(), |acc, w| &acc + &w);
        if summed != oracle::generating_function_q(&grid) {
            return Err(CaseFailure {
                case: region_case(&region),
                detail: "memoized generating function differs from summed weights".to_string(),
            });
        }
        Ok(())
    })
}

/// The Schur four-factor ratio identity on arbitrary sets: for any shuffle
/// `(X', Y')` of `(X, Y)` and any `Z` disjoint from the union,
/// `s_{λ(X'∪Z)}·s_{λ(Y'∪Z)} / (s_{λ(X∪Z)}·s_{λ(Y∪Z)})` (principal
/// specializations) equals
/// `Δ_{1,q}([x+z])Δ_{1,q}([y+z])·Δ_{1,q}(X')Δ_{1,q}(Y')` over
/// `Δ_{1,q}([x'+z])Δ_{1,q}([y'+z])·Δ_{1,q}(X)Δ_{1,q}(Y)`.
pub fn check_schur_ratio_lemma(seed: u64, cases: u64, max_element: u32) -> SuiteReport {
    let mut rng = rng_for(seed, 10);
    let range = |n: u32| DentSet::new((1..=n).collect()).expect("sorted range");
    run_suite("schur-ratio-lemma", cases, |_| {
        let x_size = rng.gen_range(0..=5);
        let x = random_subset(&mut rng, max_element, x_size);
        let y_size = rng.gen_range(0..=5);
        let y = random_subset(&mut rng, max_element, y_size);
        let (xp, yp) = random_reassignment(&mut rng, &x, &y);
        let union = x.union(&y);
        let free: Vec<u32> = (1..=max_element).filter(|p| !union.contains(*p)).collect();
        let z_size = rng.gen_range(0..=3usize.min(free.len()));
        let z = DentSet::from_unsorted(
            sample(&mut rng, free.len(), z_size)
                .into_iter()
                .map(|i| free[i]),
        )
        .expect("subset of distinct positions");
        let sizes = |s: &DentSet| (s.len() + z.len()) as u32;
        let lhs_num = &schur_principal(&xp.union(&z)) * &schur_principal(&yp.union(&z));
        let lhs_den = &schur_principal(&x.union(&z)) * &schur_principal(&y.union(&z));
        let rhs_num = &(&delta1_q(&range(sizes(&x))) * &delta1_q(&range(sizes(&y))))
            * &(&delta1_q(&xp) * &delta1_q(&yp));
        let rhs_den = &(&delta1_q(&range(sizes(&xp))) * &delta1_q(&range(sizes(&yp))))
            * &(&delta1_q(&x) * &delta1_q(&y));
        if &lhs_num * &rhs_den == &lhs_den * &rhs_num {
            Ok(())
        } else {
            Err(CaseFailure {
                case: json!({
                    "X": x.iter().collect::<Vec<_>>(),
                    "Y": y.iter().collect::<Vec<_>>(),
                    "Xp": xp.iter().collect::<Vec<_>>(),
                    "Yp": yp.iter().collect::<Vec<_>>(),
                    "Z": z.iter().collect::<Vec<_>>(),
                }),
                detail: "Schur four-factor ratio identity failed".to_string(),
            })
        }
    })
}

/// The symmetric union-cancellation identity: for `X, X' ⊆ [k]` with
/// `(X', X'_{(k)})` a shuffling of `(X, X_{(k)})` and `Z` a `k`-symmetric
/// set disjoint from the union, `Δ₁(X'∪Z)·Δ₁(X) = Δ₁(X∪Z)·Δ₁(X')`.
pub fn check_symmetric_union_lemma(seed: u64, cases: u64, max_element: u32) -> SuiteReport {
    let mut rng = rng_for(seed, 11);
    run_suite("symmetric-union-lemma", cases, |_| {
        let k = rng.gen_range(1..=max_element);
        let x_size = rng.gen_range(0..=k.min(6));
        let x = random_subset(&mut rng, k, x_size);
        let xp = random_symmetric_flip(&mut rng, &x, k);
        let union = x.union(&reflect_set(&x, k).expect("x is within [k]"));
        let mut z_elems = Vec::new();
        for p in 1..=k.div_ceil(2) {
            let q = k + 1 - p;
            if union.contains(p) || union.contains(q) || !rng.gen_bool(0.5) {
                continue;
            }
            z_elems.push(p);
            if q != p {
                z_elems.push(q);
            }
        }
        let z = DentSet::from_unsorted(z_elems).expect("distinct by construction");
        if delta1(&xp.union(&z)) * delta1(&x) == delta1(&x.union(&z)) * delta1(&xp) {
            Ok(())
        } else {
            Err(CaseFailure {
                case: json!({
                    "k": k,
                    "X": x.iter().collect::<Vec<_>>(),
                    "Xp": xp.iter().collect::<Vec<_>>(),
                    "Z": z.iter().collect::<Vec<_>>(),
                }),
                detail: "symmetric union-cancellation identity failed".to_string(),
            })
        }
    })
}

/// Runs every suite and collects the per-suite outcomes.
pub fn run_verification(config: &VerifyConfig) -> VerifyReport {
    let suites = vec![
        suite_trapezoid_count(config),
        suite_hexagon_count(config),
        suite_hexagon_gf(config),
        suite_symmetric_count(config),
        suite_delta_factorization(config),
        suite_shuffle_count_ratio(config),
        suite_shuffle_weighted_ratio(config),
        suite_shuffle_symmetric_ratio(config),
        suite_memo_consistency(config),
        check_schur_ratio_lemma(config.seed, config.cases, 20),
        check_symmetric_union_lemma(config.seed, config.cases, 20),
    ];
    VerifyReport {
        seed: config.seed,
        max_size: config.max_size,
        requested_cases: config.cases,
        all_passed: suites.iter().all(|s| s.passed),
        suites,
    }
}
