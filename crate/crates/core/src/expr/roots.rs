use super::Expr;
use crate::error::{Error, Result};
use crate::field::GLParams;

/// The root vector `E_{ij}` (`i ≠ j`), expanded recursively into the `e`'s
/// (`i < j`) or the `f`'s (`i > j`) by peeling off the last simple root.
pub fn root_vector(i: usize, j: usize, params: &GLParams) -> Result<Expr> {
    params.check_i(i)?;
    params.check_i(j)?;
    if i == j {
        return Err(Error::InvalidParams(format!("root vector E_{{{i}{j}}} needs distinct indices")));
    }
    Ok(root(i, j, params))
}

fn root(i: usize, j: usize, params: &GLParams) -> Expr {
    if j == i + 1 {
        return Expr::e(i);
    }
    if i == j + 1 {
        return Expr::f(j);
    }
    if i < j {
        let qj1 = params.qa(j - 1);
        let left = root(i, j - 1, params);
        let step = Expr::e(j - 1);
        Expr::qcomm(&left, &step, qj1.inv().unwrap())
    } else {
        // E_{ij} with i > j: E_{i,i-1} E_{i-1,j} - q_{i-1} E_{i-1,j} E_{i,i-1}
        let qi1 = params.qa(i - 1);
        let step = Expr::f(i - 1);
        let right = root(i - 1, j, params);
        Expr::qcomm(&step, &right, qi1)
    }
}

/// The ordered monomials `Γ^(θ) = Γ_1 ⋯ Γ_m` with
/// `Γ_i = E_{m+n,i}^{θ_{i,n}} ⋯ E_{m+1,i}^{θ_{i,1}}`, one per
/// `θ ∈ {0,1}^{mn}`; bit `(i-1)·n + (j-1)` of the counter is `θ_{i,j}`.
pub fn gamma_monomials(params: &GLParams) -> Vec<Expr> {
    let (m, n) = (params.m, params.n);
    (0u64..1 << (m * n))
        .map(|theta| {
            let mut factors = Vec::new();
            for i in 1..=m {
                for j in (1..=n).rev() {
                    if theta >> ((i - 1) * n + (j - 1)) & 1 == 1 {
                        factors.push(root(m + j, i, params));
                    }
                }
            }
            Expr::product(factors)
        })
        .collect()
}

/// `F = f_{m-1} f_m - q f_m f_{m-1}`; for `(2,1)` this is `f1 f2 - q f2 f1`.
pub fn odd_f(params: &GLParams) -> Option<Expr> {
    let m = params.m;
    (m >= 2).then(|| Expr::qcomm(&Expr::f(m - 1), &Expr::f(m), crate::field::RatFn::q()))
}
