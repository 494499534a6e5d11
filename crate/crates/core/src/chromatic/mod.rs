//! Chromatic quasisymmetric polynomials of abelian Dyck path graphs.
//!
//! The graph of `λ ⊂ n x m` has vertices `1..=m+n`: vertex `c <= m` is board
//! column `c`, vertex `m+n+1-r` is board row `r`. Columns form a clique, rows
//! form a clique, and column `c` is joined to row `r` exactly when the cell
//! `(r, c)` lies outside `λ`.

mod sympoly;

pub use sympoly::{esym, mul_by_esym, SymPoly};

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hits::{hit_numbers_basis, square_hits};
use crate::qarith::{q_factorial, q_falling, q_number, QLaurent};
use crate::report::VerifyReport;
use crate::shapes::{contract_cell, delete_column, delete_row, dyck_cells, BoardShape, CellRef};

/// A graph on vertices `1..=vertex_count` with edges stored as `(u, v)`,
/// `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl OrderedGraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let (u, v) = (a.min(b), a.max(b));
            if u == 0 || u == v || v > vertex_count {
                return Err(Error::InvalidArgument(format!(
                    "bad edge ({a},{b}) on {vertex_count} vertices"
                )));
            }
            set.insert((u, v));
        }
        Ok(OrderedGraph {
            vertex_count,
            edges: set,
        })
    }

    pub fn complete(vertex_count: usize) -> Self {
        let edges = (1..=vertex_count).flat_map(|u| ((u + 1)..=vertex_count).map(move |v| (u, v)));
        OrderedGraph {
            vertex_count,
            edges: edges.collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    /// For each vertex (0-based), its lower-indexed neighbours (0-based).
    fn lower_neighbours(&self) -> Vec<Vec<usize>> {
        let mut lower = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            lower[v - 1].push(u - 1);
        }
        lower
    }
}

/// Graph of `λ`: two cliques joined along the complement of `λ`.
pub fn graph_from_shape(s: &BoardShape) -> OrderedGraph {
    let (m, n) = (s.cols(), s.rows());
    let total = m + n;
    let mut edges = BTreeSet::new();
    for u in 1..=m {
        for v in (u + 1)..=m {
            edges.insert((u, v));
        }
    }
    for u in (m + 1)..=total {
        for v in (u + 1)..=total {
            edges.insert((u, v));
        }
    }
    for r in 1..=n {
        for c in 1..=m {
            if !s.contains(CellRef::new(r, c)) {
                edges.insert((c, total + 1 - r));
            }
        }
    }
    OrderedGraph {
        vertex_count: total,
        edges,
    }
}

/// Graph of `λ` read directly off the cells under its Dyck path.
pub fn graph_from_dyck_path(s: &BoardShape) -> OrderedGraph {
    OrderedGraph {
        vertex_count: s.rows() + s.cols(),
        edges: dyck_cells(s),
    }
}

/// Walks every proper colouring with colours `1..=colors`, reporting the
/// colour of each vertex and the ascent count.
fn for_each_proper_coloring(
    g: &OrderedGraph,
    colors: usize,
    mut visit: impl FnMut(&[usize], usize),
) {
    let lower = g.lower_neighbours();
    let mut coloring = vec![0usize; g.vertex_count];
    fn rec(
        v: usize,
        asc: usize,
        colors: usize,
        lower: &[Vec<usize>],
        coloring: &mut [usize],
        visit: &mut dyn FnMut(&[usize], usize),
    ) {
        if v == coloring.len() {
            visit(coloring, asc);
            return;
        }
        'colour: for c in 1..=colors {
            let mut extra = 0;
            for &u in &lower[v] {
                if coloring[u] == c {
                    continue 'colour;
                }
                if coloring[u] < c {
                    extra += 1;
                }
            }
            coloring[v] = c;
            rec(v + 1, asc + extra, colors, lower, coloring, visit);
        }
        coloring[v] = 0;
    }
    rec(0, 0, colors, &lower, &mut coloring, &mut visit);
}

fn counts_to_laurent(counts: &[u64]) -> QLaurent {
    QLaurent::new(0, counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// `Σ_κ q^asc(κ) x^κ` over proper colourings with `colors` colours, where an
/// ascent is an edge `u < v` with `κ(u) < κ(v)`. Only colourings whose colour
/// multiplicities are weakly decreasing are tallied, one per monomial key.
pub fn csf_bruteforce(g: &OrderedGraph, colors: usize) -> SymPoly {
    let max_asc = g.edges.len();
    let mut acc: HashMap<Vec<u32>, Vec<u64>> = HashMap::new();
    let mut mult = vec![0u32; colors];
    for_each_proper_coloring(g, colors, |coloring, asc| {
        mult.iter_mut().for_each(|x| *x = 0);
        for &c in coloring {
            mult[c - 1] += 1;
        }
        // one representative exponent vector per key: the weakly decreasing one
        if mult.windows(2).any(|w| w[0] < w[1]) {
            return;
        }
        let key: Vec<u32> = mult.iter().copied().filter(|&x| x > 0).collect();
        acc.entry(key).or_insert_with(|| vec![0; max_asc + 1])[asc] += 1;
    });
    let mut out = SymPoly::zero(colors);
    for (key, counts) in acc {
        out.add_term(&key, counts_to_laurent(&counts));
    }
    out
}

/// Brute force keyed by the raw exponent vector (colour multiplicities in
/// colour order), without assuming symmetry.
pub fn csf_bruteforce_compositions(
    g: &OrderedGraph,
    colors: usize,
) -> BTreeMap<Vec<u32>, QLaurent> {
    let max_asc = g.edges.len();
    let mut acc: BTreeMap<Vec<u32>, Vec<u64>> = BTreeMap::new();
    for_each_proper_coloring(g, colors, |coloring, asc| {
        let mut mult = vec![0u32; colors];
        for &c in coloring {
            mult[c - 1] += 1;
        }
        acc.entry(mult).or_insert_with(|| vec![0; max_asc + 1])[asc] += 1;
    });
    acc.into_iter()
        .map(|(k, c)| (k, counts_to_laurent(&c)))
        .collect()
}

/// Checks that every rearrangement of an exponent vector carries the same
/// coefficient, and that the symmetric brute force agrees.
pub fn verify_symmetry(s: &BoardShape, colors: usize) -> VerifyReport {
    let g = graph_from_shape(s);
    let raw = csf_bruteforce_compositions(&g, colors);
    let sym = csf_bruteforce(&g, colors);
    let mut report = VerifyReport::new();
    let mut seen = BTreeSet::new();
    for (exps, c) in &raw {
        let mut key = exps.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        report.check_eq(
            "coefficients-symmetric",
            format!("exps={exps:?}"),
            c,
            &sym.coeff(&key),
        );
        seen.insert(key.into_iter().filter(|&e| e > 0).collect::<Vec<_>>());
    }
    let keys: BTreeSet<Vec<u32>> = sym.terms().keys().cloned().collect();
    report.check(
        "coefficients-symmetric",
        "support",
        keys == seen,
        format!("{keys:?} vs {seen:?}"),
    );
    report
}

/// Memo table for [`csf_recursive`], keyed by shape (with board) and colour
/// count.
#[derive(Default)]
pub struct CsfMemo {
    table: HashMap<(BoardShape, usize), SymPoly>,
}

impl CsfMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `X_λ(x_1..x_M; q)` by peeling off the vertices of colour `M`.
    ///
    /// A colour class takes at most one column and one row; a column `c` alone
    /// has `m+n-c-λ'_c` higher neighbours, a row `r` alone has `r-1`, and a
    /// pair `(i, j) ∈ λ` has `i-1 + m+n-j-λ'_j`. Board shapes with more rows
    /// than columns arise along the way and are handled uniformly.
    pub fn csf(&mut self, s: &BoardShape, colors: usize) -> SymPoly {
        let key = (s.clone(), colors);
        if let Some(hit) = self.table.get(&key) {
            return hit.clone();
        }
        let (m, n) = (s.cols(), s.rows());
        let total = (m + n) as i64;
        let value = if colors == 0 {
            if m + n == 0 {
                SymPoly::one(0)
            } else {
                SymPoly::zero(0)
            }
        } else {
            let rest = colors - 1;
            let none = self.csf(s, rest);
            let mut single = SymPoly::zero(rest);
            for c in 1..=m {
                let w = total - c as i64 - s.col_len(c) as i64;
                let sub = delete_column(s, c).expect("column in range");
                single = single.add(&self.csf(&sub, rest).scale(&QLaurent::q_pow(w)));
            }
            for r in 1..=n {
                let sub = delete_row(s, r).expect("row in range");
                single = single.add(&self.csf(&sub, rest).scale(&QLaurent::q_pow(r as i64 - 1)));
            }
            let mut pair = SymPoly::zero(rest);
            for cell in s.cells() {
                let w = cell.row as i64 - 1 + total - cell.col as i64 - s.col_len(cell.col) as i64;
                let sub = contract_cell(s, cell.row, cell.col).expect("cell in shape");
                pair = pair.add(&self.csf(&sub, rest).scale(&QLaurent::q_pow(w)));
            }
            SymPoly::from_last_variable_expansion(colors, &[&none, &single, &pair])
        };
        self.table.insert(key, value.clone());
        value
    }
}

/// Recursive evaluation of the chromatic quasisymmetric polynomial of `λ`.
pub fn csf_recursive(s: &BoardShape, colors: usize) -> SymPoly {
    CsfMemo::new().csf(s, colors)
}

fn require_tall(s: &BoardShape) -> Result<()> {
    if s.rows() > s.cols() {
        return Err(Error::PreconditionViolation(format!(
            "expansion needs rows <= cols, got {}",
            s.board_label()
        )));
    }
    Ok(())
}

/// `X_λ = (1/[m]_n) Σ_j H_j^{m,n}(λ) X_(m^j)` with each rectangle on the same
/// `n x m` board. Every coefficient must be divisible by `[m]_n`.
pub fn gp_expansion_with(memo: &mut CsfMemo, s: &BoardShape, colors: usize) -> Result<SymPoly> {
    require_tall(s)?;
    let (m, n) = (s.cols(), s.rows());
    let hits = hit_numbers_basis(s)?;
    let mut acc = SymPoly::zero(colors);
    for (j, h) in hits.entries.iter().enumerate() {
        if h.is_zero() {
            continue;
        }
        let rect = BoardShape::rectangle(m, j, n, m)?;
        acc = acc.add(&memo.csf(&rect, colors).scale(h));
    }
    acc.exact_div_scalar(&q_falling(m as i64, n as i64)?)
}

pub fn gp_expansion(s: &BoardShape, colors: usize) -> Result<SymPoly> {
    gp_expansion_with(&mut CsfMemo::new(), s, colors)
}

/// One term `coeff · e_a e_b` of the elementary expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ETerm {
    pub a: usize,
    pub b: usize,
    pub coeff: QLaurent,
}

/// Coefficients of the elementary expansion for `k = ℓ(λ) <= λ₁`:
/// `[k]! H_k^{m+n-k}(λ)` on `e_(m+n-k, k)` and, for `j < k`,
/// `q^j [j]! [m+n-2j] H_j^{m+n-j-1}(λ)` on `e_(m+n-j, j)`, with square-board
/// hit numbers.
pub fn an_coefficients(s: &BoardShape) -> Result<Vec<ETerm>> {
    require_tall(s)?;
    let (m, n) = (s.cols(), s.rows());
    let k = s.length();
    if k > s.first_part() {
        return Err(Error::PreconditionViolation(format!(
            "elementary expansion needs ℓ(λ) <= λ₁, got {s}"
        )));
    }
    let total = m + n;
    let mut terms = Vec::with_capacity(k + 1);
    for j in 0..k {
        let jj = j as i64;
        let h = square_hits(s, total - j - 1)?.get(jj);
        let coeff = QLaurent::q_pow(jj) * q_factorial(jj)? * q_number(total as i64 - 2 * jj) * h;
        terms.push(ETerm {
            a: total - j,
            b: j,
            coeff,
        });
    }
    let h = square_hits(s, total - k)?.get(k as i64);
    terms.push(ETerm {
        a: total - k,
        b: k,
        coeff: q_factorial(k as i64)? * h,
    });
    Ok(terms)
}

/// The elementary expansion expanded into the monomial basis.
pub fn an_expansion(s: &BoardShape, colors: usize) -> Result<SymPoly> {
    let mut acc = SymPoly::zero(colors);
    for t in an_coefficients(s)? {
        let e = esym(t.a, colors).mul_by_esym(t.b);
        acc = acc.add(&e.scale(&t.coeff));
    }
    Ok(acc)
}

/// Relations among chromatic polynomials of rectangles `m^k ⊂ n x m`:
///
/// * colour-`M` recursion: `X_(m^k)(M) = X_(m^k)(M-1) + x_M (q^(n-k)[m] X_((m-1)^k) + [k] X_(m^(k-1)) + q^k[n-k] X_(m^k)) + x_M^2 q^(n-k)[k][m] X_((m-1)^(k-1))`,
///   the right-hand polynomials on the boards left after removing one or two vertices;
/// * `[m] X_((m-1)^k) = q^k [m-k] X_(m^k) + [k] X_(m^(k-1))`, all on the `n x m` board;
/// * the elementary expansion of `X_(m^k)` (needs `k <= m`).
pub fn verify_rect_recursion(m: usize, n: usize, k: usize, colors: usize) -> Result<VerifyReport> {
    verify_rect_recursion_with(&mut CsfMemo::new(), m, n, k, colors)
}

pub fn verify_rect_recursion_with(
    memo: &mut CsfMemo,
    m: usize,
    n: usize,
    k: usize,
    colors: usize,
) -> Result<VerifyReport> {
    if k > n || n > m || colors == 0 {
        return Err(Error::PreconditionViolation(format!(
            "rectangle relations need k <= n <= m and colours >= 1 (m={m}, n={n}, k={k}, M={colors})"
        )));
    }
    let (mi, ni, ki) = (m as i64, n as i64, k as i64);
    let ctx = format!("m^k={m}^{k} M={colors}");
    let rect = BoardShape::rectangle(m, k, n, m)?;
    let rest = colors - 1;
    let mut report = VerifyReport::new();

    let whole = memo.csf(&rect, colors);
    let none = memo.csf(&rect, rest);
    let mut single = SymPoly::zero(rest);
    let mut pair = SymPoly::zero(rest);
    if m >= 1 {
        let narrower = BoardShape::rectangle(m - 1, k, n, m - 1)?;
        let w = QLaurent::q_pow(ni - ki) * q_number(mi);
        single = single.add(&memo.csf(&narrower, rest).scale(&w));
    }
    if k >= 1 {
        let shorter = BoardShape::rectangle(m, k - 1, n - 1, m)?;
        single = single.add(&memo.csf(&shorter, rest).scale(&q_number(ki)));
        if m >= 1 {
            let both = BoardShape::rectangle(m - 1, k - 1, n - 1, m - 1)?;
            let w = QLaurent::q_pow(ni - ki) * q_number(ki) * q_number(mi);
            pair = pair.add(&memo.csf(&both, rest).scale(&w));
        }
    }
    if k < n {
        let lower = BoardShape::rectangle(m, k, n - 1, m)?;
        let w = QLaurent::q_pow(ki) * q_number(ni - ki);
        single = single.add(&memo.csf(&lower, rest).scale(&w));
    }
    let assembled = SymPoly::from_last_variable_expansion(colors, &[&none, &single, &pair]);
    report.check_eq("rectangle-colour-recursion", &ctx, &whole, &assembled);

    if m >= 1 {
        let short = BoardShape::rectangle(m - 1, k, n, m)?;
        let left = memo.csf(&short, colors).scale(&q_number(mi));
        let mut right = whole.scale(&(QLaurent::q_pow(ki) * q_number(mi - ki)));
        if k >= 1 {
            let shorter = BoardShape::rectangle(m, k - 1, n, m)?;
            right = right.add(&memo.csf(&shorter, colors).scale(&q_number(ki)));
        }
        report.check_eq("rectangle-column-shift", &ctx, &left, &right);
    }

    if k <= m {
        report.check_eq(
            "rectangle-elementary-expansion",
            &ctx,
            &whole,
            &an_expansion(&rect, colors)?,
        );
    }
    Ok(report)
}
