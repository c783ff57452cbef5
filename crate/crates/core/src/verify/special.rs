//! Named special cases: trivial-weight totals, pure resolutions and the
//! Cauchy decomposition.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::characters::{bracket_det, rho, weyl_char, BracketKind, CharFamily};
use crate::error::{Error, Result};
use crate::homology::{at_z, homology_terms, total_character};
use crate::partitions::{enumerate_self_conjugate, path_partition, Partition};
use crate::report::{poly_witness, value_witness, CheckOutcome, VerdictReport};
use crate::weights::{shifted_lambda, BcdParams, Family, HalfInt, Params, TypeAParams, WeightVec};
use crate::{rat, Poly};

/// The named special checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Special {
    GktClosedForm,
    KostantRhoEven,
    KostantRhoOdd,
    EfwPure,
    CauchyLambda0,
}

impl Special {
    pub const ALL: [Special; 5] = [
        Special::GktClosedForm,
        Special::KostantRhoEven,
        Special::KostantRhoOdd,
        Special::EfwPure,
        Special::CauchyLambda0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Special::GktClosedForm => "gkt_closed_form",
            Special::KostantRhoEven => "kostant_rho_even",
            Special::KostantRhoOdd => "kostant_rho_odd",
            Special::EfwPure => "efw_pure",
            Special::CauchyLambda0 => "cauchy_lambda0",
        }
    }
}

impl fmt::Display for Special {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Special {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Special::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown special check {s:?}")))
    }
}

/// Runs a special check by size: `m` for the trivial-weight totals, `n` for
/// the others. `efw_pure` at size `n` uses the all-ones degree sequence.
pub fn special_check(which: Special, size: usize) -> VerdictReport {
    match which {
        Special::EfwPure => efw_pure(&vec![1; size]),
        _ => VerdictReport::run(which.name(), json!({ "size": size }), || {
            if size == 0 {
                return Err(Error::Invalid("size must be positive".into()));
            }
            match which {
                Special::GktClosedForm => gkt_closed_form(size),
                Special::KostantRhoEven if size.is_multiple_of(2) => kostant_rho(size),
                Special::KostantRhoOdd if size % 2 == 1 => kostant_rho(size),
                Special::KostantRhoEven | Special::KostantRhoOdd => Err(Error::Invalid(format!(
                    "{} does not take m = {size}",
                    which.name()
                ))),
                Special::CauchyLambda0 => cauchy_lambda0(size),
                Special::EfwPure => unreachable!(),
            }
        }),
    }
}

fn zeros(family: Family, m: usize) -> Result<Params> {
    Ok(Params::Bcd(BcdParams::new(family, m, WeightVec::zeros(m))?))
}

fn pow2(e: usize) -> crate::Rational {
    rat(1 << e)
}

/// Family B at `λ = 0` against the self-conjugate partitions in the `m × m`
/// box and against the closed product.
fn gkt_closed_form(m: usize) -> CheckOutcome {
    let p = zeros(Family::B, m)?;
    let n = m / 2;
    let total = total_character(&p)?;
    let mut by_partitions = Poly::zero(n + 1);
    for part in enumerate_self_conjugate(m, false) {
        let w = WeightVec::from_ints(&(0..m).map(|i| part.part(i) as i64).collect::<Vec<_>>());
        by_partitions += &at_z(&weyl_char(CharFamily::A, &w, m)?, m)?;
    }
    if let Some(w) = poly_witness(&total, &by_partitions, "y") {
        return Ok(Some(
            json!({ "oracle": "self-conjugate partitions", "diff": w }),
        ));
    }
    if m.is_multiple_of(2) {
        // H · c_ρ · d_ρ = 2^n · c_{ρ^B+ρ^C} · 2 d_{ρ^B+ρ^D}.
        let rb = rho(BracketKind::B, n);
        let rc = rho(BracketKind::C, n);
        let rd = rho(BracketKind::D, n);
        let c_num: Poly = bracket_det(BracketKind::C, &rb.add(&rc), n)?;
        let c_den: Poly = bracket_det(BracketKind::C, &rc, n)?;
        let d_num: Poly = bracket_det(BracketKind::D, &rb.add(&rd), n)?;
        let d_den: Poly = bracket_det(BracketKind::D, &rd, n)?;
        let lhs = &(&total * &c_den) * &d_den;
        let rhs = (&c_num * &d_num).scale(&pow2(n + 1));
        Ok(poly_witness(&lhs, &rhs, "y").map(|w| json!({ "oracle": "closed product", "diff": w })))
    } else {
        let s: Poly = weyl_char(CharFamily::B, &rho(BracketKind::C, n), n)?;
        let rhs = (&s * &s).scale(&pow2(n + 1));
        Ok(poly_witness(&total, &rhs, "y")
            .map(|w| json!({ "oracle": "closed product", "diff": w })))
    }
}

/// `Π_α (1 + y^α)` over the roots of the orthogonal algebra of rank `n`
/// (`±e_i ± e_j`, plus `±e_i` when `odd`).
fn root_product(n: usize, odd: bool) -> Poly {
    let ar = n + 1;
    let one = Poly::one(ar);
    let mono = |pairs: &[(usize, i32)]| {
        let mut e = vec![0; ar];
        for &(i, s) in pairs {
            e[i] += 2 * s;
        }
        Poly::monomial(e, rat(1))
    };
    let mut acc = one.clone();
    for i in 1..=n {
        for j in i + 1..=n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                acc = &acc * &(&one + &mono(&[(i, a), (j, b)]));
            }
        }
        if odd {
            for a in [1, -1] {
                acc = &acc * &(&one + &mono(&[(i, a)]));
            }
        }
    }
    acc
}

/// Family D at `λ = 0`: the orthogonal-level total (half the full subset sum)
/// against `2^n Π_α (1 + y^α)` and against `2^n` times the square of the
/// staircase character.
fn kostant_rho(m: usize) -> CheckOutcome {
    let p = zeros(Family::D, m)?;
    let n = m / 2;
    let odd = m % 2 == 1;
    let total = total_character(&p)?.scale(&crate::ratio(1, 2));
    let roots = root_product(n, odd).scale(&pow2(n));
    if let Some(w) = poly_witness(&total, &roots, "y") {
        return Ok(Some(json!({ "oracle": "root product", "diff": w })));
    }
    let stair: Poly = if odd {
        weyl_char(CharFamily::B, &rho(BracketKind::B, n), n)?
    } else {
        weyl_char::<crate::Rational>(CharFamily::D, &rho(BracketKind::D, n), n)?
            .scale(&crate::ratio(1, 2))
    };
    let rhs = (&stair * &stair).scale(&pow2(n));
    Ok(poly_witness(&total, &rhs, "y").map(|w| json!({ "oracle": "staircase square", "diff": w })))
}

/// `λ = (Σe − n, Σ_{i<n} e_i − (n−1), ..., e_1 − 1, 0)` for the degree
/// sequence `e`.
pub fn efw_lambda(e: &[u32]) -> Result<WeightVec> {
    if e.is_empty() || e.contains(&0) {
        return Err(Error::Invalid(format!(
            "degree sequences are nonempty and positive, got {e:?}"
        )));
    }
    let n = e.len();
    let mut v: Vec<i64> = (1..=n)
        .map(|j| {
            let upto = n + 1 - j;
            e[..upto].iter().map(|&x| x as i64).sum::<i64>() - upto as i64
        })
        .collect();
    v.push(0);
    Ok(WeightVec::from_ints(&v))
}

/// The degree sequence of a `k = 1` weight: `e_i = (λ+δ)_{n+1-i} − (λ+δ)_{n+2-i}`.
pub fn efw_degrees(a: &TypeAParams) -> Result<Vec<u32>> {
    if a.k != 1 {
        return Err(Error::Unsupported(format!(
            "pure resolutions need k = 1, got k = {}",
            a.k
        )));
    }
    let ld = shifted_lambda(&Params::A(a.clone()));
    let n = a.n;
    Ok((1..=n)
        .map(|i| (ld.get(n - i) - ld.get(n + 1 - i)).to_int() as u32)
        .collect())
}

/// Purity of the `k = 1` table: one term per homological degree with the
/// twist growing by `e_i` at step `i`.
pub fn efw_check(a: &TypeAParams) -> CheckOutcome {
    let e = efw_degrees(a)?;
    let table = homology_terms(&Params::A(a.clone()))?;
    let mut expect = 0i64;
    for i in 0..=a.n {
        let at: Vec<_> = table.terms.iter().filter(|t| t.hom == i as i64).collect();
        if at.len() != 1 {
            return Ok(Some(json!({ "hom": i, "terms": at.len() })));
        }
        if i > 0 {
            expect += e[i - 1] as i64;
        }
        if at[0].internal != expect {
            return Ok(Some(
                json!({ "hom": i, "internal": at[0].internal, "expected": expect }),
            ));
        }
    }
    Ok(None)
}

/// Builds the weight from `e`, checks it recovers `e`, checks purity, and for
/// the all-ones sequence checks the Koszul ranks `C(n, i)`.
pub fn efw_pure(e: &[u32]) -> VerdictReport {
    VerdictReport::run(
        Special::EfwPure.name(),
        json!({ "size": e.len(), "degrees": e }),
        || {
            let lambda = efw_lambda(e)?;
            let a = TypeAParams::new(e.len(), 1, lambda)?;
            let back = efw_degrees(&a)?;
            if back != e {
                return Ok(Some(json!({ "recovered": back })));
            }
            if let Some(w) = efw_check(&a)? {
                return Ok(Some(w));
            }
            if e.iter().all(|&x| x == 1) {
                let n = e.len() as u64;
                let table = homology_terms(&Params::A(a))?;
                let mut c = 1u64;
                for (i, t) in table.terms.iter().enumerate() {
                    if let Some(w) = value_witness("koszul rank", &t.dim, &rat(c as i64)) {
                        return Ok(Some(json!({ "hom": i, "diff": w })));
                    }
                    c = c * (n - i as u64) / (i as u64 + 1);
                }
            }
            Ok(None)
        },
    )
}

fn padded(p: &Partition, len: usize) -> WeightVec {
    WeightVec::from_ints(&(0..len).map(|i| p.part(i) as i64).collect::<Vec<_>>())
}

/// Type A, `λ = 0`, `k = n`: each term is `α(S)` on one side and its
/// transpose on the other, in degree `|α(S)|`, and every partition in the
/// `n × n` box occurs once.
fn cauchy_lambda0(n: usize) -> CheckOutcome {
    let a = TypeAParams::new(n, n, WeightVec::zeros(2 * n))?;
    let table = homology_terms(&Params::A(a))?;
    let mut seen = BTreeSet::new();
    for t in &table.terms {
        let alpha = path_partition(&t.subset, n)?;
        let neg_rev = t.weights[0].neg_reversed();
        if neg_rev != padded(&alpha, n) {
            return Ok(Some(
                json!({ "S": t.subset, "side": "first", "weight": t.weights[0], "alpha": alpha }),
            ));
        }
        if t.weights[1] != padded(&alpha.transpose(), n) {
            return Ok(Some(
                json!({ "S": t.subset, "side": "second", "weight": t.weights[1], "alpha": alpha }),
            ));
        }
        if t.hom != alpha.size() as i64 {
            return Ok(Some(json!({ "S": t.subset, "hom": t.hom, "alpha": alpha })));
        }
        if !seen.insert(alpha.clone()) {
            return Ok(Some(json!({ "repeated": alpha })));
        }
    }
    let expected = (0..n as u64).fold(1u64, |c, i| c * (2 * n as u64 - i) / (i + 1));
    Ok(value_witness("box partitions", &(seen.len() as u64), &expected).map(|w| json!(w)))
}

/// Whether `h` is zero; used to recognize trivial weights.
pub(crate) fn all_zero(w: &WeightVec) -> bool {
    w.iter().all(|h| h == HalfInt::ZERO)
}
