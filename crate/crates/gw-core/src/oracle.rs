use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{GWForm, GwError, SquareClass};

/// Gram matrix of the trace form of `<c·x^power>` on `M = Q[x]/(x^m - D)` in
/// the monomial basis `1, x, ..., x^(m-1)`:
/// `G[j][k] = Tr(c · x^(power+j+k))`, with traces read off powers of the
/// companion matrix of `x^m - D`.
pub fn trace_gram(m: u32, d: i64, c: i64, power: u32) -> Result<Vec<Vec<BigRational>>, GwError> {
    if m == 0 || d == 0 || c == 0 {
        return Err(GwError::NonEtale(format!("m={m}, D={d}, c={c}")));
    }
    let m = m as usize;
    let mut companion = vec![vec![BigRational::zero(); m]; m];
    for j in 0..m - 1 {
        companion[j + 1][j] = BigRational::one();
    }
    companion[0][m - 1] = BigRational::from(BigInt::from(d));

    // Power traces Tr(x^k) for k = 0 .. 2m-2+power.
    let top = 2 * (m - 1) + power as usize;
    let mut traces = Vec::with_capacity(top + 1);
    let mut pow = identity(m);
    traces.push(mat_trace(&pow));
    for _ in 0..top {
        pow = mat_mul(&pow, &companion);
        traces.push(mat_trace(&pow));
    }

    let c = BigRational::from(BigInt::from(c));
    let mut gram = vec![vec![BigRational::zero(); m]; m];
    for j in 0..m {
        for k in 0..m {
            gram[j][k] = &c * &traces[power as usize + j + k];
        }
    }
    Ok(gram)
}

/// Independent evaluation of the trace form of `<c·x^power>` on
/// `M = Q[x]/(x^m - D)`: build the Gram matrix, diagonalize it by a symmetric
/// congruence over Q, and read off the square classes of the diagonal.
pub fn trace_oracle(m: u32, d: i64, c: i64, power: u32) -> Result<GWForm, GwError> {
    let mut g = trace_gram(m, d, c, power)?;
    let n = g.len();
    for i in 0..n {
        if g[i][i].is_zero() {
            // Prefer a nonzero diagonal entry below; otherwise fold in a row
            // with a nonzero coupling so the pivot becomes 2*G[i][j] != 0.
            if let Some(j) = (i + 1..n).find(|&j| !g[j][j].is_zero()) {
                g.swap(i, j);
                for row in g.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !g[i][j].is_zero()) {
                for k in 0..n {
                    let add = g[j][k].clone();
                    g[i][k] += add;
                }
                for row in g.iter_mut() {
                    let add = row[j].clone();
                    row[i] += add;
                }
            } else if g[i].iter().skip(i).all(|v| v.is_zero()) {
                return Err(GwError::NonEtale(format!(
                    "degenerate trace form for m={m}, D={d}, c={c}"
                )));
            }
        }
        let pivot = g[i][i].clone();
        if pivot.is_zero() {
            return Err(GwError::NonEtale(format!(
                "degenerate trace form for m={m}, D={d}, c={c}"
            )));
        }
        for r in i + 1..n {
            let factor = &g[r][i] / &pivot;
            if factor.is_zero() {
                continue;
            }
            for k in 0..n {
                let sub = &factor * &g[i][k];
                g[r][k] -= sub;
            }
            for row in g.iter_mut() {
                let sub = &factor * &row[i];
                row[r] -= sub;
            }
        }
    }

    let mut classes = Vec::with_capacity(n);
    for (i, row) in g.iter().enumerate() {
        classes.push(SquareClass::of_rational(&row[i]).map_err(|_| {
            GwError::NonEtale(format!("degenerate trace form for m={m}, D={d}, c={c}"))
        })?);
    }
    Ok(GWForm::from_classes(classes))
}

fn identity(n: usize) -> Vec<Vec<BigRational>> {
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    m
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let add = &a[i][k] * &b[k][j];
                out[i][j] += add;
            }
        }
    }
    out
}

fn mat_trace(m: &[Vec<BigRational>]) -> BigRational {
    let mut t = BigRational::zero();
    for (i, row) in m.iter().enumerate() {
        t += row[i].clone();
    }
    t
}
