use crate::error::{Error, Result};
use crate::laurent::alternating_t_sum;
use crate::weights::{shifted_lambda, BcdParams, HalfInt, Params, TypeAParams};
use crate::{rat, Matrix, Poly};

/// The four single-matrix forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    A,
    APrime,
    M,
    MPrime,
}

/// Builds the requested matrix for the parameters.
pub fn build_matrix(which: MatrixKind, p: &Params) -> Result<Matrix> {
    match (which, p) {
        (MatrixKind::A, Params::A(a)) => type_a_matrix(a, false),
        (MatrixKind::APrime, Params::A(a)) => type_a_matrix(a, true),
        (MatrixKind::M, Params::Bcd(b)) => bcd_matrix(b, false),
        (MatrixKind::MPrime, Params::Bcd(b)) => bcd_matrix(b, true),
        _ => Err(Error::Invalid(format!(
            "matrix {which:?} does not apply to {}",
            p.label()
        ))),
    }
}

fn t_pow(ar: usize, e: i64) -> Vec<i32> {
    let mut v = vec![0; ar];
    v[0] = 2 * e as i32;
    v
}

/// `(-t)^r x_i^a`, rows in `t, x_1..x_n`.
fn type_a_matrix(a: &TypeAParams, primed: bool) -> Result<Matrix> {
    let (n, m) = (a.n, a.m());
    let ar = n + 1;
    let ld = shifted_lambda(&Params::A(a.clone()));
    Matrix::from_fn(m, m, ar, |i, j| {
        // Column j carries the exponent (λ+δ)_j.
        let e = ld.get(j);
        let var = if i < n { i + 1 } else { i - n + 1 };
        let mut exp = vec![0; ar];
        exp[var] = e.doubled() as i32;
        let x = Poly::monomial(exp, rat(1));
        if i < n {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            x.mul_monomial(&t_pow(ar, j as i64), &rat(sign))
        } else if primed {
            &alternating_t_sum(ar, j as i64 - 1) * &x
        } else {
            x
        }
    })
}

/// Rows `z_i^{e_j} ± t^{m+1-j-γ'} z_i^{-e_j}`, in `t, y_1..y_n`.
fn bcd_matrix(b: &BcdParams, primed: bool) -> Result<Matrix> {
    let (m, n) = (b.m, b.n());
    let ar = n + 1;
    let gf = b.gamma_floor();
    let ld = shifted_lambda(&Params::Bcd(b.clone()));
    // z_i^h as a half-unit exponent vector.
    let z = |i: usize, h: HalfInt| {
        let mut e = vec![0; ar];
        if i < n {
            e[i + 1] = h.doubled() as i32;
        } else if i < 2 * n {
            e[i - n + 1] = -h.doubled() as i32;
        }
        e
    };
    Matrix::from_fn(m, m, ar, |i, j| {
        let jj = j as i64 + 1;
        let e = ld.get(j);
        let up = Poly::monomial(z(i, e), rat(1));
        let down = Poly::monomial(z(i, -e), rat(1));
        if primed && i < n {
            let sign = if gf % 2 == 0 { rat(1) } else { rat(-1) };
            let pair = &up + &down.scale(&sign);
            &alternating_t_sum(ar, m as i64 - jj - gf) * &pair
        } else {
            let sign = if (m as i64 + jj) % 2 == 0 { 1 } else { -1 };
            let tpow = m as i64 + 1 - jj - gf;
            &up + &down.mul_monomial(&t_pow(ar, tpow), &rat(sign))
        }
    })
}
