use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::qarith::{exact_div, QLaurent};

/// Symmetric polynomial in a fixed number of variables, stored in the
/// monomial basis: each key is a partition (weakly decreasing, no zeros, at
/// most `num_vars` parts) and its value is the coefficient of every monomial
/// whose sorted exponent vector is that partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, QLaurent>,
}

fn canonical(exps: &[u32]) -> Vec<u32> {
    let mut key: Vec<u32> = exps.iter().copied().filter(|&e| e > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    key
}

impl SymPoly {
    pub fn zero(num_vars: usize) -> Self {
        SymPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(&[], QLaurent::one());
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, QLaurent> {
        &self.terms
    }

    /// Coefficient of any monomial with the given exponents (in any order).
    pub fn coeff(&self, exps: &[u32]) -> QLaurent {
        self.terms
            .get(&canonical(exps))
            .cloned()
            .unwrap_or_default()
    }

    /// Adds `c` to the coefficient at `exps`. Exponent vectors with more
    /// nonzero entries than variables are dropped.
    pub fn add_term(&mut self, exps: &[u32], c: QLaurent) {
        let key = canonical(exps);
        if key.len() > self.num_vars || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += &c;
        if slot.is_zero() {
            let key = canonical(exps);
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k, -c);
        }
        out
    }

    pub fn scale(&self, c: &QLaurent) -> SymPoly {
        let mut out = SymPoly::zero(self.num_vars);
        for (k, v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    /// Divides every coefficient exactly.
    pub fn exact_div_scalar(&self, c: &QLaurent) -> Result<SymPoly> {
        let mut out = SymPoly::zero(self.num_vars);
        for (k, v) in &self.terms {
            out.add_term(k, exact_div(v, c)?);
        }
        Ok(out)
    }

    /// Specialization `q = 1`.
    pub fn eval_at_one(&self) -> BTreeMap<Vec<u32>, BigInt> {
        self.terms
            .iter()
            .map(|(k, v)| (k.clone(), v.eval_at_one()))
            .filter(|(_, v)| *v != BigInt::from(0))
            .collect()
    }

    /// Assembles a polynomial in `num_vars` variables from its expansion in
    /// the last variable: `p0 + x_M p1 + x_M^2 p2`, each `p_e` symmetric in
    /// the first `num_vars - 1` variables. The result must be symmetric in
    /// all variables; each coefficient is read from the representative whose
    /// last exponent is the smallest part.
    pub fn from_last_variable_expansion(num_vars: usize, parts: &[&SymPoly]) -> SymPoly {
        let mut out = SymPoly::zero(num_vars);
        for (e, p) in parts.iter().enumerate() {
            for (key, c) in &p.terms {
                if e == 0 {
                    if key.len() < num_vars {
                        out.add_term(key, c.clone());
                    }
                } else if key.len() + 1 == num_vars
                    && key.last().is_none_or(|&smallest| smallest >= e as u32)
                {
                    let mut full = key.clone();
                    full.push(e as u32);
                    out.add_term(&full, c.clone());
                }
            }
        }
        out
    }

    /// Multiplication by the elementary symmetric polynomial `e_k`.
    ///
    /// The coefficient of `x^ν` in `p e_k` is the sum over `k`-subsets `S` of
    /// variables with `ν_i >= 1` on `S` of `p`'s coefficient at `ν - 1_S`.
    pub fn mul_by_esym(&self, k: usize) -> SymPoly {
        let m = self.num_vars;
        if k > m {
            return SymPoly::zero(m);
        }
        let subsets: Vec<Vec<usize>> = k_subsets(m, k);
        let mut candidates = BTreeSet::new();
        for key in self.terms.keys() {
            let mut padded = key.clone();
            padded.resize(m, 0);
            for s in &subsets {
                let mut nu = padded.clone();
                for &i in s {
                    nu[i] += 1;
                }
                candidates.insert(canonical(&nu));
            }
        }
        let mut out = SymPoly::zero(m);
        for nu in candidates {
            let mut padded = nu.clone();
            padded.resize(m, 0);
            let mut total = QLaurent::zero();
            for s in &subsets {
                if s.iter().all(|&i| padded[i] >= 1) {
                    let mut prev = padded.clone();
                    for &i in s {
                        prev[i] -= 1;
                    }
                    if let Some(c) = self.terms.get(&canonical(&prev)) {
                        total += c;
                    }
                }
            }
            out.add_term(&nu, total);
        }
        out
    }

    pub(crate) fn with_corrupted_coefficient(&self) -> SymPoly {
        let mut out = self.clone();
        let key = self.terms.keys().next().cloned().unwrap_or_default();
        out.add_term(&key, QLaurent::one());
        out
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Elementary symmetric polynomial `e_k` in `num_vars` variables (zero when
/// `k > num_vars`).
pub fn esym(k: usize, num_vars: usize) -> SymPoly {
    let mut p = SymPoly::zero(num_vars);
    p.add_term(&vec![1; k], QLaurent::one());
    p
}

/// `p · e_k`.
pub fn mul_by_esym(p: &SymPoly, k: usize) -> SymPoly {
    p.mul_by_esym(k)
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let idx: Vec<String> = k.iter().map(ToString::to_string).collect();
                format!("({c})m[{}]", idx.join(","))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    exps: &'a [u32],
    coeff: &'a QLaurent,
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            seq.serialize_element(&TermJson { exps: k, coeff: c })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(m: usize, terms: &[(&[u32], i64)]) -> SymPoly {
        let mut p = SymPoly::zero(m);
        for (k, c) in terms {
            p.add_term(k, QLaurent::constant(*c));
        }
        p
    }

    #[test]
    fn esym_examples() {
        assert_eq!(esym(0, 3), SymPoly::one(3));
        assert_eq!(esym(2, 2), sym(2, &[(&[1, 1], 1)]));
        assert_eq!(esym(3, 2), SymPoly::zero(2));
        assert_eq!(
            mul_by_esym(&esym(1, 2), 1),
            sym(2, &[(&[2], 1), (&[1, 1], 2)])
        );
    }

    /// e_1^2 e_2 in 3 variables by direct monomial expansion.
    #[test]
    fn esym_products_match_expansion() {
        let direct = {
            let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
            for a in 0..3 {
                for b in 0..3 {
                    for (c, d) in [(0, 1), (0, 2), (1, 2)] {
                        let mut e = [0u32; 3];
                        e[a] += 1;
                        e[b] += 1;
                        e[c] += 1;
                        e[d] += 1;
                        *counts.entry(e.to_vec()).or_default() += 1;
                    }
                }
            }
            let mut p = SymPoly::zero(3);
            for (k, c) in counts {
                if k.windows(2).all(|w| w[0] >= w[1]) {
                    p.add_term(&k, QLaurent::constant(c));
                }
            }
            p
        };
        let prod = esym(1, 3).mul_by_esym(1).mul_by_esym(2);
        assert_eq!(prod, direct);
    }

    #[test]
    fn keys_are_canonical() {
        let mut p = SymPoly::zero(3);
        p.add_term(&[0, 1, 2], QLaurent::one());
        p.add_term(&[2, 1], QLaurent::one());
        assert_eq!(p.coeff(&[1, 0, 2]), QLaurent::constant(2));
        p.add_term(&[1, 1, 1, 1], QLaurent::one());
        assert_eq!(p.terms().len(), 1);
        p.add_term(&[1, 2], -QLaurent::constant(2));
        assert!(p.is_zero());
    }

    #[test]
    fn json_shape() {
        let p = sym(2, &[(&[1, 1], 1)]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"exps":[1,1],"coeff":{"min":0,"coeffs":["1"]}}]"#
        );
    }
}
