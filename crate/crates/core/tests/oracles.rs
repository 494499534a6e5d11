//! Independent oracles: naive enumerations and recurrences written without
//! the library's algorithms, plus frozen values.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use qchroma_core::chromatic::{
    an_coefficients, csf_recursive, esym, graph_from_shape, OrderedGraph,
};
use qchroma_core::hits::{gr_hit_square, hit_numbers_basis};
use qchroma_core::qarith::{q_binomial, q_factorial, QLaurent};
use qchroma_core::rooks::rook_number;
use qchroma_core::shapes::{enumerate_shapes, BoardShape, CellRef};

fn p(s: &str) -> QLaurent {
    s.parse().unwrap()
}

/// Gaussian binomials by `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
#[test]
fn gaussian_binomials_match_pascal_recurrence() {
    let mut rows: Vec<Vec<QLaurent>> = vec![vec![QLaurent::one()]];
    for n in 1..=10usize {
        let prev = &rows[n - 1];
        let row: Vec<QLaurent> = (0..=n)
            .map(|k| {
                let left = if k >= 1 {
                    prev[k - 1].clone()
                } else {
                    QLaurent::zero()
                };
                let right = prev
                    .get(k)
                    .map_or(QLaurent::zero(), |x| QLaurent::q_pow(k as i64) * x);
                left + right
            })
            .collect();
        rows.push(row);
    }
    for (n, row) in rows.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            assert_eq!(&q_binomial(n as i64, k as i64).unwrap(), v, "n={n} k={k}");
        }
    }
}

fn permutations_into(n: usize, m: usize) -> Vec<Vec<usize>> {
    // injections rows 1..=n -> columns 1..=m
    fn rec(n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 1..=m {
            if !cur.contains(&c) {
                cur.push(c);
                rec(n, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::new(), &mut out);
    out
}

/// At `q = 1`, `H_j` counts full placements with exactly `j` rooks in `λ`.
#[test]
fn hit_numbers_at_one_count_placements() {
    for m in 0..=5 {
        for n in 0..=m {
            let perms = permutations_into(n, m);
            for s in enumerate_shapes(m, n, None) {
                let mut counts = vec![0i64; n + 1];
                for perm in &perms {
                    let hits = perm
                        .iter()
                        .enumerate()
                        .filter(|&(r, &c)| s.contains(CellRef::new(r + 1, c)))
                        .count();
                    counts[hits] += 1;
                }
                let h = hit_numbers_basis(&s).unwrap();
                let at_one: Vec<i64> = h
                    .entries
                    .iter()
                    .map(|x| i64::try_from(x.eval_at_one()).unwrap())
                    .collect();
                assert_eq!(at_one, counts, "{s}");
            }
        }
    }
}

/// At `q = 1`, `R_k` counts `k`-subsets of cells of `λ` with distinct rows
/// and columns.
#[test]
fn rook_numbers_at_one_count_subsets() {
    for m in 0..=4 {
        for n in 0..=4 {
            for s in enumerate_shapes(m, n, None) {
                let cells: Vec<CellRef> = s.cells().collect();
                let mut counts = vec![0i64; cells.len() + 1];
                for mask in 0u32..(1 << cells.len()) {
                    let chosen: Vec<&CellRef> = (0..cells.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| &cells[i])
                        .collect();
                    let ok = chosen.iter().enumerate().all(|(i, a)| {
                        chosen[i + 1..]
                            .iter()
                            .all(|b| a.row != b.row && a.col != b.col)
                    });
                    if ok {
                        counts[chosen.len()] += 1;
                    }
                }
                for (k, &c) in counts.iter().enumerate() {
                    assert_eq!(
                        rook_number(&s, k).eval_at_one(),
                        BigInt::from(c),
                        "{s} k={k}"
                    );
                }
            }
        }
    }
}

/// Every colouring in `{1..M}^N`, with no pruning and raw exponent vectors.
fn naive_csf(g: &OrderedGraph, colors: usize) -> BTreeMap<Vec<u32>, QLaurent> {
    let n = g.vertex_count();
    let mut out: BTreeMap<Vec<u32>, QLaurent> = BTreeMap::new();
    if colors == 0 {
        if n == 0 {
            out.insert(Vec::new(), QLaurent::one());
        }
        return out;
    }
    let total = colors.pow(n as u32);
    for code in 0..total {
        let kappa: Vec<usize> = (0..n)
            .map(|v| code / colors.pow(v as u32) % colors)
            .collect();
        let mut asc = 0;
        let mut proper = true;
        for &(u, v) in g.edges() {
            let (a, b) = (kappa[u - 1], kappa[v - 1]);
            if a == b {
                proper = false;
                break;
            }
            if a < b {
                asc += 1;
            }
        }
        if !proper {
            continue;
        }
        let mut exps = vec![0u32; colors];
        for &c in &kappa {
            exps[c] += 1;
        }
        let slot = out.entry(exps).or_default();
        *slot += &QLaurent::q_pow(asc);
    }
    out
}

#[test]
fn recursion_matches_naive_colourings() {
    for m in 0..=4 {
        for n in 0..=m.min(5 - m) {
            for s in enumerate_shapes(m, n, None) {
                let colors = m + n;
                let naive = naive_csf(&graph_from_shape(&s), colors);
                let rec = csf_recursive(&s, colors);
                for (exps, c) in &naive {
                    assert_eq!(&rec.coeff(exps), c, "{s} {exps:?}");
                }
                let support = naive
                    .keys()
                    .filter(|e| e.windows(2).all(|w| w[0] >= w[1]))
                    .count();
                assert_eq!(rec.terms().len(), support, "{s}");
            }
        }
    }
}

/// The empty shape gives a complete graph: `[N]! e_N`.
#[test]
fn empty_shape_is_factorial_times_top_elementary() {
    for m in 0..=4 {
        for n in 0..=m {
            let total = m + n;
            let x = csf_recursive(&BoardShape::empty(n, m), total);
            assert_eq!(
                x,
                esym(total, total).scale(&q_factorial(total as i64).unwrap()),
                "{n}x{m}"
            );
        }
    }
}

#[test]
fn frozen_values() {
    let s = BoardShape::new(vec![2, 1], 2, 3).unwrap();
    assert_eq!(
        hit_numbers_basis(&s).unwrap().entries,
        vec![p("1"), p("2q+2q^2"), p("q^3")]
    );

    // a full 1x1 board: two isolated vertices, X = e_1^2
    let full = BoardShape::new(vec![1], 1, 1).unwrap();
    let terms = an_coefficients(&full).unwrap();
    assert_eq!(terms.len(), 2);
    assert!(terms[0].coeff.is_zero());
    assert_eq!(
        (terms[1].a, terms[1].b, terms[1].coeff.clone()),
        (1, 1, QLaurent::one())
    );
    assert_eq!(csf_recursive(&full, 2), esym(1, 2).mul_by_esym(1));

    assert_eq!(
        gr_hit_square(&BoardShape::empty(3, 3)).unwrap()[0],
        q_factorial(3).unwrap()
    );
    assert_eq!(
        gr_hit_square(&full).unwrap(),
        vec![QLaurent::zero(), QLaurent::one()]
    );
}
