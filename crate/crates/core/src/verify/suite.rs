//! Per-instance verification and the bounded full suite.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::laurent::DEFAULT_MAX_DET_SIZE;
use crate::report::{sort_verdicts, VerdictReport};
use crate::verify::checks::{
    params_json, verify_det_form, verify_divisibility, verify_equidistribution,
    verify_factorization,
};
use crate::verify::dims::{c_lambda_gap, total_dimension, verify_total_dimension};
use crate::verify::identities::{check_identity, Identity};
use crate::verify::special::{all_zero, efw_check, efw_pure, special_check, Special};
use crate::weights::{BcdParams, Family, HalfInt, Params, TypeAParams, WeightVec};

/// Size bounds and sampling seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest determinant the checks will expand.
    pub det_bound: usize,
    /// Largest `m` for families B, C, D.
    pub bcd_max_m: usize,
    /// Largest `n + k` for type A.
    pub a_max_sum: usize,
    pub samples_a: usize,
    pub samples_bcd: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::new(None, 0)
    }
}

impl SuiteConfig {
    /// `max_size` bounds `m` (BCD), `n + k − 2` (type A) and the determinant
    /// size; without it `m ≤ 4`, `n + k ≤ 6` and determinants up to 12.
    pub fn new(max_size: Option<usize>, seed: u64) -> Self {
        let m = max_size.unwrap_or(4);
        SuiteConfig {
            det_bound: max_size.unwrap_or(DEFAULT_MAX_DET_SIZE),
            bcd_max_m: m,
            a_max_sum: m + 2,
            samples_a: 3,
            samples_bcd: 5,
            seed,
        }
    }
}

/// Every check that applies to one parameter set, in canonical order.
pub fn verify_instance(p: &Params, det_bound: usize) -> Vec<VerdictReport> {
    let mut out = vec![
        verify_det_form(p, det_bound),
        verify_divisibility(p).0,
        verify_equidistribution(p),
        verify_factorization(p),
        verify_total_dimension(p),
    ];
    if let Ok(r) = total_dimension(p) {
        if r.c_lambda.is_some() {
            out.push(VerdictReport::run("c_lambda_gap", params_json(p), || {
                c_lambda_gap(&r)
            }));
        }
    }
    match p {
        Params::A(a) => {
            if a.k == 1 {
                out.push(VerdictReport::run(
                    Special::EfwPure.name(),
                    params_json(p),
                    || efw_check(a),
                ));
            }
            if a.k == a.n && all_zero(&a.lambda) {
                out.push(special_check(Special::CauchyLambda0, a.n));
            }
        }
        Params::Bcd(b) if all_zero(&b.lambda) => match b.family {
            Family::B => out.push(special_check(Special::GktClosedForm, b.m)),
            Family::D if b.m % 2 == 0 => out.push(special_check(Special::KostantRhoEven, b.m)),
            Family::D => out.push(special_check(Special::KostantRhoOdd, b.m)),
            Family::C => {}
        },
        Params::Bcd(_) => {}
    }
    sort_verdicts(&mut out);
    out
}

/// One unit of suite work.
#[derive(Clone, Debug, PartialEq)]
pub enum Job {
    Instance(Params),
    Identity(Identity, usize),
    Special(Special, usize),
    PureResolution(Vec<u32>),
}

impl Job {
    pub fn run(&self, cfg: &SuiteConfig) -> Vec<VerdictReport> {
        match self {
            Job::Instance(p) => verify_instance(p, cfg.det_bound),
            Job::Identity(id, size) => vec![check_identity(*id, *size)],
            Job::Special(s, size) => vec![special_check(*s, *size)],
            Job::PureResolution(e) => vec![efw_pure(e)],
        }
    }
}

fn rng_for(seed: u64, tag: &str, a: usize, b: usize) -> ChaCha8Rng {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for byte in tag.bytes().chain([a as u8, b as u8]) {
        h = (h ^ byte as u64).wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(h)
}

fn sorted_desc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Up to `count` distinct weakly decreasing samples, `λ = 0` first.
fn sample<F: FnMut(&mut ChaCha8Rng) -> WeightVec>(
    rng: &mut ChaCha8Rng,
    len: usize,
    count: usize,
    mut draw: F,
) -> Vec<WeightVec> {
    let mut out = vec![WeightVec::zeros(len)];
    let mut tries = 0;
    while out.len() < count && tries < 50 * count {
        tries += 1;
        let w = draw(rng);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// Sampled type A weights: integer entries in `-1..=2`.
pub fn sample_type_a(n: usize, k: usize, count: usize, seed: u64) -> Vec<TypeAParams> {
    let mut rng = rng_for(seed, "A", n, k);
    sample(&mut rng, n + k, count, |r| {
        WeightVec::from_ints(&sorted_desc(
            (0..n + k).map(|_| r.gen_range(-1..=2)).collect(),
        ))
    })
    .into_iter()
    .map(|l| TypeAParams::new(n, k, l).expect("sampled weights are dominant"))
    .collect()
}

/// Sampled BCD weights: entries in `0..=2`, or half-integers in `1/2..=5/2`
/// for families B and D.
pub fn sample_bcd(family: Family, m: usize, count: usize, seed: u64) -> Vec<BcdParams> {
    let mut rng = rng_for(seed, &family.to_string(), m, 0);
    sample(&mut rng, m, count, |r| {
        let half = family != Family::C && r.gen_bool(0.5);
        let doubled: Vec<i64> = if half {
            (0..m).map(|_| *[1, 3, 5].choose(r).unwrap()).collect()
        } else {
            (0..m).map(|_| 2 * r.gen_range(0..=2)).collect()
        };
        WeightVec(
            sorted_desc(doubled)
                .into_iter()
                .map(HalfInt::from_doubled)
                .collect(),
        )
    })
    .into_iter()
    .map(|l| BcdParams::new(family, m, l).expect("sampled weights are dominant"))
    .collect()
}

/// Sampled degree sequences of length `2..=4` with entries `1..=3`.
pub fn sample_degree_sequences(count: usize, seed: u64) -> Vec<Vec<u32>> {
    let mut rng = rng_for(seed, "efw", 0, 0);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            (0..n).map(|_| rng.gen_range(1..=3)).collect()
        })
        .collect()
}

/// Every job of the full suite.
pub fn suite_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    for total in 2..=cfg.a_max_sum {
        for k in 1..=total / 2 {
            for a in sample_type_a(total - k, k, cfg.samples_a, cfg.seed) {
                jobs.push(Job::Instance(Params::A(a)));
            }
        }
    }
    for family in [Family::B, Family::C, Family::D] {
        for m in 1..=cfg.bcd_max_m {
            for b in sample_bcd(family, m, cfg.samples_bcd, cfg.seed) {
                jobs.push(Job::Instance(Params::Bcd(b)));
            }
        }
    }
    for m in 1..=5 {
        jobs.push(Job::Identity(Identity::DenomProduct, m));
    }
    for n in 1..=3 {
        for id in [
            Identity::AdeltaEven,
            Identity::AdeltaOdd,
            Identity::StairSpPin,
            Identity::StairSoOddPin,
        ] {
            jobs.push(Job::Identity(id, n));
        }
    }
    for m in 2..=cfg.bcd_max_m.max(2) {
        jobs.push(Job::Special(Special::GktClosedForm, m));
        let s = if m % 2 == 0 {
            Special::KostantRhoEven
        } else {
            Special::KostantRhoOdd
        };
        jobs.push(Job::Special(s, m));
    }
    for n in 1..=3 {
        jobs.push(Job::Special(Special::CauchyLambda0, n));
    }
    jobs.push(Job::Special(Special::EfwPure, 3));
    for e in sample_degree_sequences(3, cfg.seed) {
        jobs.push(Job::PureResolution(e));
    }
    jobs
}

/// Runs the full suite in parallel, handing each verdict to `on_verdict` as
/// it completes, and returns all verdicts in canonical order.
pub fn run_suite(
    cfg: &SuiteConfig,
    on_verdict: impl Fn(&VerdictReport) + Sync,
) -> Vec<VerdictReport> {
    let mut all: Vec<VerdictReport> = suite_jobs(cfg)
        .par_iter()
        .flat_map_iter(|job| {
            let v = job.run(cfg);
            v.iter().for_each(&on_verdict);
            v
        })
        .collect();
    sort_verdicts(&mut all);
    all
}
