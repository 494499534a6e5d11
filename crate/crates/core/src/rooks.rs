//! q-rook numbers of Ferrers boards and the identities they satisfy.

use crate::error::{Error, Result};
use crate::qarith::{q_falling_at, q_number, QLaurent};
use crate::report::VerifyReport;
use crate::shapes::{contract_cell, delete_column, delete_row, BoardShape, CellRef};

/// A set of mutually non-attacking rooks, sorted by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RookPlacement {
    rooks: Vec<CellRef>,
}

impl RookPlacement {
    pub fn new(mut rooks: Vec<CellRef>) -> Result<Self> {
        rooks.sort();
        for (a, b) in rooks
            .iter()
            .enumerate()
            .flat_map(|(i, a)| rooks[i + 1..].iter().map(move |b| (a, b)))
        {
            if a.row == b.row || a.col == b.col {
                return Err(Error::InvalidArgument(format!(
                    "rooks {a} and {b} attack each other"
                )));
            }
        }
        Ok(RookPlacement { rooks })
    }

    pub fn rooks(&self) -> &[CellRef] {
        &self.rooks
    }

    pub fn len(&self) -> usize {
        self.rooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rooks.is_empty()
    }

    /// Column of the rook in `row`, if any.
    pub fn col_in_row(&self, row: usize) -> Option<usize> {
        self.rooks.iter().find(|c| c.row == row).map(|c| c.col)
    }
}

/// All placements of `k` non-attacking rooks inside the shape.
///
/// Backtracks row by row; the free columns of row `r` are a prefix
/// `1..=λ_r` minus the columns already taken.
pub fn placements(s: &BoardShape, k: usize) -> Vec<RookPlacement> {
    fn rec(
        s: &BoardShape,
        row: usize,
        left: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<CellRef>,
        out: &mut Vec<RookPlacement>,
    ) {
        if left == 0 {
            out.push(RookPlacement { rooks: cur.clone() });
            return;
        }
        if row > s.length() || s.length() - row + 1 < left {
            return;
        }
        for c in 1..=s.row_len(row) {
            if used[c] {
                continue;
            }
            used[c] = true;
            cur.push(CellRef::new(row, c));
            rec(s, row + 1, left - 1, used, cur, out);
            cur.pop();
            used[c] = false;
        }
        rec(s, row + 1, left, used, cur, out);
    }
    let mut out = Vec::new();
    let mut used = vec![false; s.first_part() + 1];
    rec(s, 1, k, &mut used, &mut Vec::new(), &mut out);
    out
}

/// Cells of the shape left after each rook cancels its own cell, the cells
/// above it in its column and the cells left of it in its row.
pub fn inv_statistic(s: &BoardShape, p: &RookPlacement) -> Result<usize> {
    if let Some(bad) = p.rooks.iter().find(|&&c| !s.contains(c)) {
        return Err(Error::InvalidArgument(format!("rook {bad} outside {s}")));
    }
    let cancelled = |cell: CellRef| {
        p.rooks.iter().any(|r| {
            (r.col == cell.col && cell.row <= r.row) || (r.row == cell.row && cell.col <= r.col)
        })
    };
    Ok(s.cells().filter(|&c| !cancelled(c)).count())
}

/// Garsia–Remmel q-rook number `R_k(λ) = Σ_p q^inv(p)`.
pub fn rook_number(s: &BoardShape, k: usize) -> QLaurent {
    let mut counts = vec![0i64; s.size() + 1];
    for p in placements(s, k) {
        // placements are generated inside the shape
        counts[inv_statistic(s, &p).expect("placement inside shape")] += 1;
    }
    QLaurent::from_i64s(0, &counts)
}

/// `R_0(λ), ..., R_len(λ)`, padded with zeros to `len + 1` entries.
pub fn rook_numbers(s: &BoardShape, len: usize) -> Vec<QLaurent> {
    (0..=len).map(|k| rook_number(s, k)).collect()
}

/// Number of `k`-rook placements, counted without any statistic.
pub fn count_placements(s: &BoardShape, k: usize) -> u64 {
    // Fill rows from the shortest: the i-th chosen row (bottom-up) sees i
    // columns already taken, all inside its prefix.
    fn rec(parts: &[usize], k: usize, taken: usize) -> u64 {
        if k == 0 {
            return 1;
        }
        let Some((&last, rest)) = parts.split_last() else {
            return 0;
        };
        let with = if last > taken {
            (last - taken) as u64 * rec(rest, k - 1, taken + 1)
        } else {
            0
        };
        with + rec(rest, k, taken)
    }
    rec(s.parts(), k, 0)
}

/// `Σ_k R_k [x]_(ℓ-k)` from precomputed `R_0..R_ℓ`.
fn f_by_rooks(rooks: &[QLaurent], x: i64) -> QLaurent {
    let len = rooks.len() - 1;
    rooks
        .iter()
        .enumerate()
        .map(|(k, r)| r * &q_falling_at(x, len - k))
        .sum()
}

fn f_by_product(s: &BoardShape, x: i64) -> QLaurent {
    let len = s.length() as i64;
    (1..=len).fold(QLaurent::one(), |acc, i| {
        acc.mul_q_number(x + s.row_len((len - i + 1) as usize) as i64 - i + 1)
    })
}

/// Rook generating function `F(x; λ) = Σ_k R_k(λ)[x]_(ℓ-k)` at an integer
/// `x`, evaluated both as that sum and as the factored product; the two must
/// agree.
pub fn f_eval(s: &BoardShape, x: i64) -> Result<QLaurent> {
    f_eval_with(s, &rook_numbers(s, s.length()), x)
}

fn f_eval_with(s: &BoardShape, rooks: &[QLaurent], x: i64) -> Result<QLaurent> {
    let by_rooks = f_by_rooks(rooks, x);
    let by_product = f_by_product(s, x);
    if by_rooks != by_product {
        return Err(Error::RouteMismatch {
            what: format!("F(x={x}) of {s}"),
            left: by_rooks.to_string(),
            right: by_product.to_string(),
        });
    }
    Ok(by_product)
}

/// Checks the two evaluations of `F(x; λ)` against each other at
/// `x = -(ℓ+λ₁+2) ..= ℓ+λ₁+2`.
pub fn verify_f_routes(s: &BoardShape) -> VerifyReport {
    let mut report = VerifyReport::new();
    let reach = (s.length() + s.first_part() + 2) as i64;
    let rooks = rook_numbers(s, s.length());
    for x in -reach..=reach {
        report.check_eq(
            "F-sum-vs-product",
            format!("x={x}"),
            &f_by_rooks(&rooks, x),
            &f_by_product(s, x),
        );
    }
    report
}

/// Verifies the ratio identity for `F(x-1; λ) / F(x; λ)` with denominators
/// cleared:
///
/// `q^λ₁ [x] F(x-1) = [x-ℓ+λ₁] F(x) - Σ_j q^(λ₁-j) Π_(t≤λ'_j) [x+λ_t-1-ℓ+t] Π_(t>λ'_j) [x+λ_t-ℓ+t]`.
///
/// Both sides are `(1-q)^-(ℓ+1)` times a polynomial of degree at most `ℓ+1`
/// in `z = q^x`, so agreement at `ℓ+2` distinct `x` proves it; the
/// `2(ℓ+λ₁)+3` points used here over-cover that.
pub fn verify_f_ratio(s: &BoardShape) -> Result<VerifyReport> {
    if s.is_empty() {
        return Err(Error::PreconditionViolation(
            "F-ratio needs a nonempty shape".into(),
        ));
    }
    let len = s.length() as i64;
    let first = s.first_part() as i64;
    let rooks = rook_numbers(s, s.length());
    let mut report = VerifyReport::new();
    let factor_arg =
        |x: i64, t: i64, shift: i64| x + s.row_len(t as usize) as i64 + shift - len + t;
    for x in (len + 1)..=(len + 2 * (len + first) + 3) {
        let left = f_eval_with(s, &rooks, x - 1)?.mul_q_number(x).shift(first);
        let mut right = f_eval_with(s, &rooks, x)?.mul_q_number(x - len + first);
        for j in 1..=first {
            let col = s.col_len(j as usize) as i64;
            let term = (1..=len).fold(QLaurent::one(), |acc, t| {
                acc.mul_q_number(factor_arg(x, t, if t <= col { -1 } else { 0 }))
            });
            right -= term.shift(first - j);
        }
        report.check_eq("F-ratio", format!("x={x}"), &left, &right);
    }
    Ok(report)
}

/// Checks the three q-rook identities obtained by deleting a column,
/// deleting a row and contracting a cell:
///
/// * `Σ_j q^(m-j) R_k(λ/j) = R_k(λ)[m-k] - R_(k+1)(λ)(q^m - q^(m-k-1))`
/// * `Σ_i q^(i-1+λ_i) R_k(λ/i) = ([n]-[k]) R_k(λ)`, rows past `ℓ(λ)` included
/// * `Σ_((i,j)∈λ) q^(i-j+λ_i) R_k(λ/(i,j)) = q[k+1] R_(k+1)(λ)`
pub fn verify_rook_identities(s: &BoardShape, k: usize) -> Result<VerifyReport> {
    let (m, n) = (s.cols() as i64, s.rows() as i64);
    let ki = k as i64;
    let rk = rook_number(s, k);
    let rk1 = rook_number(s, k + 1);
    let ctx = format!("k={k}");
    let mut report = VerifyReport::new();

    let mut left = QLaurent::zero();
    for j in 1..=s.cols() {
        left += QLaurent::q_pow(m - j as i64) * rook_number(&delete_column(s, j)?, k);
    }
    let right =
        &rk * &q_number(m - ki) - &rk1 * &(QLaurent::q_pow(m) - QLaurent::q_pow(m - ki - 1));
    report.check_eq("rook-column-deletion", &ctx, &left, &right);

    let mut left = QLaurent::zero();
    for i in 1..=s.rows() {
        let w = i as i64 - 1 + s.row_len(i) as i64;
        left += QLaurent::q_pow(w) * rook_number(&delete_row(s, i)?, k);
    }
    let right = (q_number(n) - q_number(ki)) * &rk;
    report.check_eq("rook-row-deletion", &ctx, &left, &right);

    let mut left = QLaurent::zero();
    for c in s.cells() {
        let w = c.row as i64 - c.col as i64 + s.row_len(c.row) as i64;
        left += QLaurent::q_pow(w) * rook_number(&contract_cell(s, c.row, c.col)?, k);
    }
    let right = QLaurent::q_pow(1) * q_number(ki + 1) * rk1;
    report.check_eq("rook-cell-contraction", &ctx, &left, &right);

    Ok(report)
}
