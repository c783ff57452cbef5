//! Closed-form total dimensions and their agreement with the Betti tables.

use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{dim_formal, DimGroup};
use crate::error::Result;
use crate::homology::{homology_terms, pin_level};
use crate::report::{CheckOutcome, VerdictReport};
use crate::verify::checks::params_json;
use crate::weights::{rho_weights, BcdParams, Family, HalfInt, Params, SpinComponent, TypeAParams};
use crate::{rat, ratio, Rational};

/// Total dimension by every available route.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionReport {
    pub params: Params,
    /// The general closed product.
    #[serde(serialize_with = "as_string")]
    pub value: Rational,
    /// The per-family proposition (types B, C, D).
    #[serde(serialize_with = "opt_string")]
    pub proposition: Option<Rational>,
    /// Exponent of the 2-power in `2^e · dim(top) · dim(bot)`.
    pub two_power: i64,
    #[serde(serialize_with = "as_string")]
    pub top_dim: Rational,
    #[serde(serialize_with = "as_string")]
    pub bot_dim: Rational,
    /// Betti-table total at Pin level, with the `λ_m = 0` double count removed.
    #[serde(serialize_with = "as_string")]
    pub table_total: Rational,
    /// Table total of the requested spin component when it is not both.
    #[serde(serialize_with = "opt_string")]
    pub component_total: Option<Rational>,
    pub dim_n_minus: u32,
    /// `value / 2^{dim n_-}` where `n_-` is abelian.
    #[serde(serialize_with = "opt_string")]
    pub c_lambda: Option<Rational>,
    #[serde(serialize_with = "opt_string")]
    pub xi1: Option<Rational>,
    #[serde(serialize_with = "opt_string")]
    pub xi2: Option<Rational>,
    #[serde(serialize_with = "opt_string")]
    pub theta: Option<Rational>,
}

fn as_string<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn opt_string<S: serde::Serializer>(
    v: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl DimensionReport {
    /// `value = 2^e · top · bot`, e.g. `3696 = 2^2 · 77/2 · 24`.
    pub fn factored(&self) -> String {
        format!(
            "{} = 2^{} · {} · {}",
            self.value, self.two_power, self.top_dim, self.bot_dim
        )
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["factored"] = json!(self.factored());
        v
    }
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(num_bigint::BigInt::from(1) << e as usize)
    } else {
        Rational::from_integer(num_bigint::BigInt::from(1) << (-e) as usize).recip()
    }
}

fn q(h: HalfInt) -> Rational {
    h.to_rational()
}

/// `Π_{i<j, i≡j mod 2} (1 + (λ_i − λ_j)/(j − i))` over 1-based positions.
fn same_parity_gl(l: &[Rational]) -> Rational {
    let mut acc = rat(1);
    for i in 0..l.len() {
        for j in (i + 2..l.len()).step_by(2) {
            acc *= rat(1) + (&l[i] - &l[j]) / rat((j - i) as i64);
        }
    }
    acc
}

/// Dimension of `n_-`: `nk` in type A, `m(m+1)/2` for B and C, `m(m-1)/2` for D.
pub fn dim_n_minus(p: &Params) -> u32 {
    match p {
        Params::A(a) => (a.n * a.k) as u32,
        Params::Bcd(b) => match b.family {
            Family::B | Family::C => (b.m * (b.m + 1) / 2) as u32,
            Family::D => (b.m * (b.m - 1) / 2) as u32,
        },
    }
}

/// Evaluates every route. Type A needs `k ∈ {n-1, n}`.
pub fn total_dimension(p: &Params) -> Result<DimensionReport> {
    p.validate()?;
    let (top, bot) = rho_weights(p)?;
    let table = homology_terms(&pin_level(p))?;
    match p {
        Params::A(a) => Ok(type_a_report(a, p, &top, &bot, table.grand_total)),
        Params::Bcd(b) => {
            let component_total = (b.component != SpinComponent::Both)
                .then(|| homology_terms(p).map(|t| t.grand_total))
                .transpose()?;
            Ok(bcd_report(
                b,
                p,
                &top,
                &bot,
                table.grand_total,
                component_total,
            ))
        }
    }
}

fn type_a_report(
    a: &TypeAParams,
    p: &Params,
    top: &crate::weights::WeightVec,
    bot: &crate::weights::WeightVec,
    table_total: Rational,
) -> DimensionReport {
    let l: Vec<Rational> = a.lambda.iter().map(q).collect();
    let dn = dim_n_minus(p);
    let value = pow2(dn as i64) * same_parity_gl(&l);
    DimensionReport {
        params: p.clone(),
        c_lambda: Some(&value / pow2(dn as i64)),
        value,
        proposition: None,
        two_power: a.k as i64,
        top_dim: dim_formal(DimGroup::Gl, top),
        bot_dim: dim_formal(DimGroup::Gl, bot),
        table_total,
        component_total: None,
        dim_n_minus: dn,
        xi1: None,
        xi2: None,
        theta: None,
    }
}

fn bcd_report(
    b: &BcdParams,
    p: &Params,
    top: &crate::weights::WeightVec,
    bot: &crate::weights::WeightVec,
    pin_total: Rational,
    component_total: Option<Rational>,
) -> DimensionReport {
    let (m, n, e) = (b.m, b.n() as i64, b.eps() as i64);
    let g = q(b.gamma());
    let shift = b.pin_shift() as i64;
    let l: Vec<Rational> = b.lambda.iter().map(q).collect();
    // 1-based access.
    let lam = |i: i64| l[(i - 1) as usize].clone();

    let mut xi1 = rat(1);
    for i in 1..=n {
        for j in i..=n {
            let num = lam(2 * i - 1 + e) + lam(2 * j - 1 + e) - &g * rat(2);
            xi1 *= rat(2) + num / rat(2 * n + 2 - i - j);
        }
    }
    let mut xi2 = rat(1);
    for i in 1..=n + e {
        for j in i + 1..=n + e {
            let num = rat(2) + lam(2 * i - e) + lam(2 * j - e) - &g * rat(2);
            xi2 *= rat(2) + num / rat(2 * n + 2 * e - i - j);
        }
    }
    let gl_pairs = same_parity_gl(&l);
    // Each same-parity pair contributes a factor 2(1 + ...).
    let pairs: i64 = (0..m).map(|i| (i + 2..m).step_by(2).count() as i64).sum();
    let value = pow2(n + 1 - shift + pairs) * &gl_pairs * &xi1 * &xi2;

    let dn = dim_n_minus(p);
    let mut theta = None;
    let proposition = match b.family {
        Family::C => {
            let mut acc = pow2(dn as i64);
            for i in 1..=m as i64 {
                for j in (i + 2..=m as i64).step_by(2) {
                    acc *= rat(1) + (lam(i) - lam(j)) / rat(j - i);
                    acc *= rat(1) + (lam(i) + lam(j)) / rat(2 * (m as i64 + 1) - i - j);
                }
            }
            // The single factors come from the diagonal of Ξ₁.
            for i in 1..=n {
                acc *= rat(1) + lam(2 * i - 1 + e) / rat(2 * (n + 1 - i));
            }
            acc
        }
        Family::D => {
            let mut acc = pow2(dn as i64 + 1 - b.zeta() as i64);
            for i in 1..=m as i64 {
                for j in (i + 2..=m as i64).step_by(2) {
                    acc *= rat(1) + (lam(i) - lam(j)) / rat(j - i);
                    acc *= rat(1) + (lam(i) + lam(j)) / rat(2 * m as i64 - i - j);
                }
            }
            for i in 1..=n {
                acc *= rat(1) + lam(2 * i - 1 + e) / rat(m as i64 + 1 - e - 2 * i);
            }
            acc
        }
        Family::B => {
            let p2 = (m * m).div_ceil(2) as i64;
            let th = &xi1 * &xi2 / pow2(p2 - n * (n + e) - 1);
            let v = pow2(p2) * &gl_pairs * &th;
            theta = Some(th);
            v
        }
    };
    let table_total = pin_total / pow2(shift);
    let c_lambda = (b.family != Family::B).then(|| &value / pow2(dn as i64));
    DimensionReport {
        params: p.clone(),
        value,
        proposition: Some(proposition),
        two_power: n - shift,
        top_dim: dim_formal(DimGroup::Sp, top),
        bot_dim: dim_formal(DimGroup::Pin, bot),
        table_total,
        component_total,
        dim_n_minus: dn,
        c_lambda,
        xi1: Some(xi1),
        xi2: Some(xi2),
        theta,
    }
}

/// All routes agree; for family B with `m > 1` also `Θ > 1`.
pub fn verify_total_dimension(p: &Params) -> VerdictReport {
    VerdictReport::run("total_dimension", params_json(p), || {
        let r = total_dimension(p)?;
        Ok(dimension_mismatch(&r))
    })
}

/// The first disagreement among the routes, if any.
pub fn dimension_mismatch(r: &DimensionReport) -> Option<Value> {
    let factored = pow2(r.two_power) * &r.top_dim * &r.bot_dim;
    let mut routes = vec![("table", r.table_total.clone()), ("factored", factored)];
    if let Some(pr) = &r.proposition {
        routes.push(("proposition", pr.clone()));
    }
    for (name, v) in routes {
        if v != r.value {
            return Some(
                json!({ "route": name, "product": r.value.to_string(), "other": v.to_string() }),
            );
        }
    }
    if let (Some(th), Params::Bcd(b)) = (&r.theta, &r.params) {
        if b.m > 1 && *th <= rat(1) {
            return Some(json!({ "theta": th.to_string() }));
        }
    }
    None
}

/// Whether `L_λ` is one-dimensional.
pub fn one_dimensional(p: &Params) -> bool {
    match p {
        Params::A(a) => a.lambda.iter().all(|h| h == a.lambda.get(0)),
        Params::Bcd(b) => b.lambda.iter().all(|h| h == HalfInt::ZERO),
    }
}

/// Checks `C_λ = 1` or `C_λ ≥ 3/2`, and `C_λ = 1` for one-dimensional `λ`.
/// The converse fails when `n_-` is too small to see `λ` (for instance C with
/// `m = 1`), so it is not asserted here.
pub fn c_lambda_gap(r: &DimensionReport) -> CheckOutcome {
    let Some(c) = &r.c_lambda else {
        return Ok(None);
    };
    let one_dim = one_dimensional(&r.params);
    let ok = if *c == rat(1) {
        true
    } else {
        !one_dim && *c >= ratio(3, 2)
    };
    Ok((!ok).then(|| json!({ "c_lambda": c.to_string(), "one_dimensional": one_dim })))
}
