//! Determinantal form, divisibility, equidistribution and factorization.

use serde_json::{json, Value};

use crate::characters::{bracket_det, rho, weyl_char, BracketKind, CharFamily};
use crate::error::{Error, Result};
use crate::homology::{
    at_z, blocks, graded_character, pin_level, restricted_character, ring_arity, total_character,
    var_prefix, Block,
};
use crate::laurent::one_plus_t_pow;
use crate::report::{poly_witness, CheckOutcome, VerdictReport};
use crate::subsets::Subset;
use crate::verify::matrices::{build_matrix, MatrixKind};
use crate::weights::{delta_a, delta_bcd, rho_weights, BcdParams, Params, TypeAParams};
use crate::{rat, Poly};

pub(crate) fn params_json(p: &Params) -> Value {
    serde_json::to_value(p).expect("params serialize")
}

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Power of `1 + t` dividing the graded character: `k` in type A, `n` otherwise.
pub fn divisibility_power(p: &Params) -> u32 {
    match p {
        Params::A(a) => a.k as u32,
        Params::Bcd(b) => b.n() as u32,
    }
}

fn type_a_prefactor(a: &TypeAParams) -> Result<Poly> {
    let (n, k) = (a.n, a.k);
    let ar = n + 1;
    let c2 = (n * n.saturating_sub(1) / 2) as i32;
    let mut e = vec![2 * k as i32; ar];
    e[0] = 2 * c2;
    let sign = if c2 % 2 == 0 { 1 } else { -1 };
    let mono = Poly::monomial(e, rat(sign));
    let an: Poly = bracket_det(BracketKind::A, &delta_a(n), n)?;
    let ak: Poly =
        bracket_det::<crate::Rational>(BracketKind::A, &delta_a(k), k)?.with_arity(ar)?;
    Ok(&(&mono * &an) * &ak)
}

/// `a_δ(z)` with the family's δ, in `t, y_1..y_n`.
pub fn bcd_prefactor(b: &BcdParams) -> Result<Poly> {
    let a: Poly = bracket_det(BracketKind::A, &delta_bcd(b.family, b.m), b.m)?;
    at_z(&a, b.m)
}

/// Both equalities of the determinantal form: the subset sum times the
/// prefactors against `det` of the big matrix, and `det` against
/// `(1+t)^power · det` of the primed matrix.
pub fn verify_det_form(p: &Params, max_size: usize) -> VerdictReport {
    VerdictReport::run("det_form", params_json(p), || det_form_body(p, max_size))
}

fn det_form_body(p: &Params, max_size: usize) -> CheckOutcome {
    p.validate()?;
    let q = pin_level(p);
    let (big, primed, prefactor) = match &q {
        Params::A(a) => (MatrixKind::A, MatrixKind::APrime, type_a_prefactor(a)?),
        Params::Bcd(b) => (MatrixKind::M, MatrixKind::MPrime, bcd_prefactor(b)?),
    };
    let det = build_matrix(big, &q)?.determinant_bounded(max_size)?;
    let det_primed = build_matrix(primed, &q)?.determinant_bounded(max_size)?;
    let sum_side = &prefactor * &graded_character(&q)?;
    let prefix = var_prefix(p);
    if let Some(w) = poly_witness(&sum_side, &det, prefix) {
        return Ok(Some(json!({ "equality": "sum = det", "diff": w })));
    }
    let factored = &one_plus_t_pow(ring_arity(p), divisibility_power(p)) * &det_primed;
    if let Some(w) = poly_witness(&det, &factored, prefix) {
        return Ok(Some(
            json!({ "equality": "det = (1+t)^power det'", "diff": w }),
        ));
    }
    Ok(None)
}

/// Exact division of the graded character by `(1+t)^power`; returns the
/// verdict and the quotient when it exists.
pub fn verify_divisibility(p: &Params) -> (VerdictReport, Option<Poly>) {
    let mut quotient = None;
    let report = VerdictReport::run("divisibility", params_json(p), || {
        p.validate()?;
        let g = graded_character(&pin_level(p))?;
        let d = one_plus_t_pow(ring_arity(p), divisibility_power(p));
        match g.exact_divide(&d) {
            Ok(q) => {
                quotient = Some(q);
                Ok(None)
            }
            Err(Error::NotDivisible { remainder }) => Ok(Some(
                json!({ "power": divisibility_power(p), "remainder": remainder }),
            )),
            Err(e) => Err(e),
        }
    });
    (report, quotient)
}

/// Blocks of the Pin-level parameters.
fn level_blocks(p: &Params) -> Result<Vec<Block>> {
    blocks(&pin_level(p))
}

/// Type A: the binomial relations, vanishing below `q-k`, the alternating
/// sums, full equality when `k = n`, and `H(1) = 2^k` times the full-odd
/// block. Other families: all blocks equal, the alternating sums vanish, and
/// `H(1) = 2^n` times the empty block.
pub fn verify_equidistribution(p: &Params) -> VerdictReport {
    VerdictReport::run("equidistribution", params_json(p), || {
        p.validate()?;
        let bl = level_blocks(p)?;
        let total = total_character(&pin_level(p))?;
        match p {
            Params::A(a) => equi_type_a(a, &bl, &total),
            Params::Bcd(b) => equi_bcd(b, &bl, &total),
        }
    })
}

fn find<'a>(bl: &'a [Block], key: &Subset) -> &'a Block {
    bl.iter()
        .find(|b| b.key == *key)
        .expect("all keys are enumerated")
}

fn sum_blocks<'a>(ar: usize, it: impl Iterator<Item = &'a Block>) -> Poly {
    it.fold(Poly::zero(ar), |acc, b| &acc + &b.character)
}

fn equi_type_a(a: &TypeAParams, bl: &[Block], total: &Poly) -> CheckOutcome {
    let ar = a.n + 1;
    let q = a.q();
    let odd = Subset::full(a.m()).odd_slice();
    let full = &find(bl, &odd).character;
    for i in 0..=q {
        let lhs = sum_blocks(ar, bl.iter().filter(|b| b.key.len() == i));
        let rhs = full.scale(&rat(binomial(a.k as u64, (q - i) as u64) as i64));
        if let Some(w) = poly_witness(&lhs, &rhs, "x") {
            return Ok(Some(json!({ "relation": "binomial", "i": i, "diff": w })));
        }
    }
    for b in bl.iter().filter(|b| b.key.len() + a.k < q) {
        if !b.character.is_zero() {
            return Ok(Some(
                json!({ "relation": "vanishing", "T": b.key, "block": b.character.display_with("x") }),
            ));
        }
    }
    // Σ_{T ⊇ T0} (-1)^{|T|} H_T = 0 for |T0| < k.
    for t0 in bl.iter().map(|b| b.key).filter(|t| t.len() < a.k) {
        let mut acc = Poly::zero(ar);
        for b in bl.iter().filter(|b| t0.is_subset_of(&b.key)) {
            let sign = if b.key.len() % 2 == 0 { 1 } else { -1 };
            acc += &b.character.scale(&rat(sign));
        }
        if !acc.is_zero() {
            return Ok(Some(
                json!({ "relation": "alternating", "T": t0, "sum": acc.display_with("x") }),
            ));
        }
    }
    if a.k == a.n {
        for b in bl {
            if let Some(w) = poly_witness(&b.character, full, "x") {
                return Ok(Some(
                    json!({ "relation": "all equal", "T": b.key, "diff": w }),
                ));
            }
        }
    }
    let scaled = full.scale(&rat(1 << a.k));
    Ok(poly_witness(total, &scaled, "x")
        .map(|w| json!({ "relation": "H(1) = 2^k H_odd", "diff": w })))
}

fn equi_bcd(b: &BcdParams, bl: &[Block], total: &Poly) -> CheckOutcome {
    let ar = b.n() + 1;
    let first = &bl[0];
    debug_assert!(first.key.is_empty());
    for blk in &bl[1..] {
        if let Some(w) = poly_witness(&blk.character, &first.character, "y") {
            return Ok(Some(
                json!({ "relation": "all equal", "T": blk.key, "diff": w }),
            ));
        }
    }
    for t in bl.iter().map(|x| x.key).filter(|t| !t.is_empty()) {
        let mut acc = Poly::zero(ar);
        for blk in bl.iter().filter(|x| x.key.is_subset_of(&t)) {
            let sign = if blk.key.len() % 2 == 0 { 1 } else { -1 };
            acc += &blk.character.scale(&rat(sign));
        }
        if !acc.is_zero() {
            return Ok(Some(
                json!({ "relation": "alternating", "T": t, "sum": acc.display_with("y") }),
            ));
        }
    }
    let scaled = first.character.scale(&rat(1 << b.n()));
    Ok(poly_witness(total, &scaled, "y")
        .map(|w| json!({ "relation": "H(1) = 2^n H_empty", "diff": w })))
}

/// The refined type A identities `h_{odd} = h_{j} + h_{odd \ j}` for every
/// odd `j`, observed at `n = 4, k = 2`.
pub fn refined_pair_identities(a: &TypeAParams) -> Result<Option<Value>> {
    let p = Params::A(a.clone());
    let odd = Subset::full(a.m()).odd_slice();
    let full = restricted_character(&p, &odd)?;
    for j in odd.elements() {
        let single = Subset::new(a.m(), &[j])?;
        let rest = Subset::from_bits(a.m(), odd.bits() & !single.bits());
        let rhs = &restricted_character(&p, &single)? + &restricted_character(&p, &rest)?;
        if let Some(w) = poly_witness(&full, &rhs, "x") {
            return Ok(Some(json!({ "j": j, "diff": w })));
        }
    }
    Ok(None)
}

/// `H(1)` against the power of 2 times the product of the two staircase-type
/// characters. The BCD comparison is cross-multiplied by the denominators so
/// half-integer weights never need an inexact quotient; when both quotients
/// are exact they are compared directly too.
pub fn verify_factorization(p: &Params) -> VerdictReport {
    VerdictReport::run("factorization", params_json(p), || {
        p.validate()?;
        let (top, bot) = rho_weights(p)?;
        let total = total_character(&pin_level(p))?;
        match p {
            Params::A(a) => {
                let st: Poly = weyl_char(CharFamily::A, &top, a.n)?;
                let sb: Poly =
                    weyl_char::<crate::Rational>(CharFamily::A, &bot, a.k)?.with_arity(a.n + 1)?;
                let rhs = (&st * &sb).scale(&rat(1 << a.k));
                Ok(poly_witness(&total, &rhs, "x"))
            }
            Params::Bcd(b) => factor_bcd(b, &top, &bot, &total),
        }
    })
}

/// Brings a polynomial in `y_1..y_{n+ε}` down to `y_1..y_n` with
/// `y_{n+1} = 1`.
fn drop_last(p: &Poly, n: usize, eps: usize) -> Result<Poly> {
    if eps == 1 {
        p.set_one(n + 1).with_arity(n + 1)
    } else {
        Ok(p.clone())
    }
}

fn factor_bcd(
    b: &BcdParams,
    top: &crate::weights::WeightVec,
    bot: &crate::weights::WeightVec,
    total: &Poly,
) -> CheckOutcome {
    let (n, e) = (b.n(), b.eps());
    let rc = rho(BracketKind::C, n);
    let rd = rho(BracketKind::D, n + e);
    let c_num: Poly = bracket_det(BracketKind::C, &top.add(&rc), n)?;
    let c_den: Poly = bracket_det(BracketKind::C, &rc, n)?;
    let d_num = drop_last(&bracket_det(BracketKind::D, &bot.add(&rd), n + e)?, n, e)?;
    let d_den = drop_last(&bracket_det(BracketKind::D, &rd, n + e)?, n, e)?;
    // H · c_ρ · d_ρ = 2^n · c_{top+ρ} · 2 d_{bot+ρ}.
    let lhs = &(total * &c_den) * &d_den;
    let rhs = (&c_num * &d_num).scale(&rat(1 << (n + 1)));
    if let Some(w) = poly_witness(&lhs, &rhs, "y") {
        return Ok(Some(json!({ "form": "cross-multiplied", "diff": w })));
    }
    if let (Ok(sc), Ok(sd)) = (c_num.exact_divide(&c_den), d_num.exact_divide(&d_den)) {
        let rhs = (&sc * &sd).scale(&rat(1 << (n + 1)));
        if let Some(w) = poly_witness(total, &rhs, "y") {
            return Ok(Some(json!({ "form": "quotients", "diff": w })));
        }
    }
    Ok(None)
}
