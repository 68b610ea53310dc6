//! Seeded property suites behind `stiefel selftest`.
//!
//! Cases are enumerated smallest first (by genus or cross-cap count), so the
//! first failure reported is a minimal one in that order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use stiefel_core::bundles::{
    is_isomorphic, normal_bundle_cocycle, total_space_orientable, w1_class, LineBundleCocycle,
    SurfaceHandleDecomposition,
};
use stiefel_core::framing::{
    certify, solvable_bruteforce, verify_certificate, w2_restriction, BundleDescriptor,
    Certification, DEFAULT_ORACLE_BOUND,
};
use stiefel_core::gf2::Gf2Vector;
use stiefel_core::quatframe::{
    antipodal_check, check_frame, frame_by_left_multiplication, gram_schmidt, linear_fields,
    random_unit_points,
};
use stiefel_core::surface::{class_of, represent_simple, verify_multicurve};
use stiefel_core::HeegaardSplitting;

use crate::commands::Outcome;
use crate::exit_codes;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    S3Frames,
    OracleEquivalence,
    Curves,
    Bundles,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "s3-frames" => Ok(Self::S3Frames),
            "oracle-equivalence" => Ok(Self::OracleEquivalence),
            "curves" => Ok(Self::Curves),
            "bundles" => Ok(Self::Bundles),
            other => Err(format!(
                "unknown suite {other:?} (expected s3-frames, oracle-equivalence, curves or bundles)"
            )),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::S3Frames => "s3-frames",
            Self::OracleEquivalence => "oracle-equivalence",
            Self::Curves => "curves",
            Self::Bundles => "bundles",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelftestOptions {
    pub seed: u64,
    /// Sample count; each suite has its own default.
    pub samples: Option<usize>,
    pub tol: f64,
    /// Upper bound on genus (or cross-caps for `bundles`).
    pub max_size: Option<usize>,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        Self { seed: 0, samples: None, tol: 1e-12, max_size: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelftestSummary {
    pub suite: Suite,
    pub seed: u64,
    pub samples: usize,
    pub max_size: usize,
    pub checks: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl SelftestSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    checks: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checks: 0, failures: 0, first_failure: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }
}

/// SplitMix64 finalizer, used to derive independent sub-seeds.
pub fn mix_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed ^ a.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ b.wrapping_mul(0xd1b5_4a32_d192_ed03);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn run(suite: Suite, opts: &SelftestOptions) -> SelftestSummary {
    let (samples, max_size, tally) = match suite {
        Suite::S3Frames => {
            let n = opts.samples.unwrap_or(1000);
            (n, 0, s3_frames(n, opts.seed, opts.tol))
        }
        Suite::OracleEquivalence => {
            let n = opts.samples.unwrap_or(200);
            let g = opts.max_size.unwrap_or(4).min(DEFAULT_ORACLE_BOUND);
            (n, g, oracle_equivalence(g, n, opts.seed))
        }
        Suite::Curves => {
            let g = opts.max_size.unwrap_or(3);
            ((0..=g).map(|k| 1usize << (2 * k)).sum(), g, curves(g))
        }
        Suite::Bundles => {
            let n = opts.samples.unwrap_or(1000);
            let max = opts.max_size.unwrap_or(8).clamp(1, 16);
            (n, max, bundles(max, n, opts.seed))
        }
    };
    SelftestSummary {
        suite,
        seed: opts.seed,
        samples,
        max_size,
        checks: tally.checks,
        failures: tally.failures,
        first_failure: tally.first_failure,
    }
}

/// Runs a suite and renders the summary; exit 4 if any check failed.
pub fn outcome(suite: Suite, opts: &SelftestOptions) -> Outcome {
    let summary = run(suite, opts);
    if summary.passed() {
        Outcome::json(exit_codes::SUCCESS, &summary)
    } else {
        let mut out = Outcome::json(exit_codes::SELFTEST_FAILURE, &summary);
        out.stderr = format!(
            "error: {} of {} checks failed; first failure: {}\n",
            summary.failures,
            summary.checks,
            summary.first_failure.as_deref().unwrap_or("?")
        );
        out
    }
}

fn s3_frames(samples: usize, seed: u64, tol: f64) -> Tally {
    let mut t = Tally::new();
    for x in random_unit_points::<f64>(samples, seed) {
        let c = check_frame(&x, tol);
        t.check(c.passed(), || format!("check_frame at {x:?}: {:?}", c.issues));
        t.check(antipodal_check(&x, tol), || format!("antipodal_check at {x:?}"));
        let f = linear_fields(&x);
        t.check(f == frame_by_left_multiplication(&x), || {
            format!("displayed fields differ from left multiplication at {x:?}")
        });
        match gram_schmidt(&f.u1, &f.u2, &f.u3, tol) {
            Ok(once) => {
                let fixed = once.max_deviation(&f) <= tol;
                t.check(fixed, || format!("gram_schmidt moved an orthonormal frame at {x:?}"));
                let twice = gram_schmidt(&once.u1, &once.u2, &once.u3, tol)
                    .map(|g| g.max_deviation(&once) <= tol)
                    .unwrap_or(false);
                t.check(twice, || format!("gram_schmidt not idempotent at {x:?}"));
            }
            Err(e) => t.check(false, || format!("gram_schmidt at {x:?}: {e}")),
        }
    }
    t
}

/// Descriptors for one splitting: all of them for `g <= 2`, otherwise 100
/// seeded random ones.
fn descriptors(g: usize, rng: &mut ChaCha8Rng) -> Vec<BundleDescriptor> {
    let n = 2 * g;
    let masks: Vec<u64> = if g <= 2 {
        (0..1u64 << n).collect()
    } else {
        (0..100).map(|_| rng.random::<u64>() & ((1u64 << n) - 1)).collect()
    };
    masks.into_iter().map(|m| BundleDescriptor::new(Gf2Vector::from_mask(n, m))).collect()
}

fn oracle_equivalence(max_genus: usize, splittings: usize, seed: u64) -> Tally {
    let mut t = Tally::new();
    for g in 0..=max_genus {
        for i in 0..splittings {
            let s = HeegaardSplitting::random(g, mix_seed(seed, g as u64, i as u64));
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, 1000 + g as u64, i as u64));
            for d in descriptors(g, &mut rng) {
                let case = || format!("g={g} splitting={} a_star={}", s.label(), d.a_star());
                let (Ok(w2), Ok(brute), Ok(outcome)) = (
                    w2_restriction(&s, &d),
                    solvable_bruteforce(&s, &d, DEFAULT_ORACLE_BOUND),
                    certify(&s, &d),
                ) else {
                    t.check(false, || format!("{}: evaluation error", case()));
                    continue;
                };
                let w2_zero = w2.iter().all(|b| !b);
                t.check(outcome.is_certified() == brute.solvable && w2_zero == brute.solvable, || {
                    format!(
                        "{}: certify={} oracle={} w2_zero={w2_zero}",
                        case(),
                        outcome.is_certified(),
                        brute.solvable
                    )
                });
                match outcome {
                    Certification::Certified(cert) => {
                        t.check(verify_certificate(&cert), || format!("{}: certificate rejected", case()))
                    }
                    Certification::Obstructed(w) => {
                        let valid = s.h2().is_ok_and(|(_, h2)| h2.contains(&w.alpha)) && d.evaluate(&w.alpha);
                        t.check(valid, || format!("{}: bad witness {}", case(), w.alpha));
                    }
                }
            }
        }
    }
    t
}

fn curves(max_genus: usize) -> Tally {
    let mut t = Tally::new();
    for g in 0..=max_genus {
        for mask in 0..1u64 << (2 * g) {
            let alpha = Gf2Vector::from_mask(2 * g, mask);
            let ok = represent_simple(g, &alpha).is_ok_and(|c| {
                let mut sum = Gf2Vector::zeros(2 * g);
                for &k in &c.components {
                    sum.add_assign(&class_of(g, k).expect("in range"));
                }
                verify_multicurve(&c) && sum == alpha
            });
            t.check(ok, || format!("g={g} class={alpha}"));
        }
    }
    t
}

fn bundles(max_n: usize, samples: usize, seed: u64) -> Tally {
    let mut t = Tally::new();
    for n in 1..=max_n {
        for sign in [false, true] {
            let ok = normal_bundle_cocycle(n, sign).is_ok_and(|b| total_space_orientable(&b));
            t.check(ok, || format!("normal bundle n={n} sign={sign} not orientable"));
        }
        for mask in 0..1u64 << n {
            let d = SurfaceHandleDecomposition::cross_caps(n).expect("n >= 1");
            let b = LineBundleCocycle::new(d, Gf2Vector::from_mask(n, mask), false).expect("sized");
            let flipped = b.with_two_handle_sign(true);
            t.check(w1_class(&b) == w1_class(&flipped), || {
                format!("n={n} weights={} w1 depends on 2-handle sign", b.fiber_weights())
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, 77, 0));
    for i in 0..samples {
        let n = rng.random_range(1..=max_n);
        let mut draw = || {
            let d = SurfaceHandleDecomposition::cross_caps(n).expect("n >= 1");
            let w = rng.random::<u64>() & ((1u64 << n) - 1);
            LineBundleCocycle::new(d, Gf2Vector::from_mask(n, w), rng.random()).expect("sized")
        };
        let (a, b, c) = (draw(), draw(), draw());
        let iso = |x: &LineBundleCocycle, y: &LineBundleCocycle| is_isomorphic(x, y).expect("same n");
        let reflexive = iso(&a, &a);
        let symmetric = iso(&a, &b) == iso(&b, &a);
        let transitive = !(iso(&a, &b) && iso(&b, &c)) || iso(&a, &c);
        t.check(reflexive && symmetric && transitive, || format!("sample {i}: n={n} equivalence axioms fail"));
    }
    t
}
