//! Symmetric polynomials in formal Chern roots, and their rewriting in terms
//! of elementary symmetric polynomials (i.e. Chern classes).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exponent vector over the roots `x_1..x_k`.
pub(crate) type Monomial = Vec<u16>;

/// Polynomial in `k` root variables, truncated above a total degree.
#[derive(Debug, Clone)]
pub(crate) struct RootPoly {
    nvars: usize,
    max_deg: usize,
    terms: HashMap<Monomial, BigInt>,
}

fn deg(m: &Monomial) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

impl RootPoly {
    pub fn one(nvars: usize, max_deg: usize) -> Self {
        let mut terms = HashMap::new();
        terms.insert(vec![0; nvars], BigInt::one());
        Self {
            nvars,
            max_deg,
            terms,
        }
    }

    /// Multiplies in place by `1 + sum_i a_i x_i`.
    pub fn mul_linear(&mut self, a: &[u32]) {
        let mut out = self.terms.clone();
        for (m, c) in &self.terms {
            if deg(m) >= self.max_deg {
                continue;
            }
            for (i, &ai) in a.iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                let mut m2 = m.clone();
                m2[i] += 1;
                *out.entry(m2).or_default() += c * ai;
            }
        }
        out.retain(|_, c| !c.is_zero());
        self.terms = out;
    }

    pub fn mul(&self, other: &RootPoly) -> RootPoly {
        let mut terms: HashMap<Monomial, BigInt> = HashMap::new();
        for (m1, c1) in &self.terms {
            let d1 = deg(m1);
            for (m2, c2) in &other.terms {
                if d1 + deg(m2) > self.max_deg {
                    continue;
                }
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                *terms.entry(m).or_default() += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        RootPoly {
            nvars: self.nvars,
            max_deg: self.max_deg,
            terms,
        }
    }

    /// Elementary symmetric polynomial `e_i`.
    pub fn elementary(nvars: usize, i: usize, max_deg: usize) -> RootPoly {
        let mut terms = HashMap::new();
        if i <= nvars && i <= max_deg {
            for subset in subsets(nvars, i) {
                let mut m = vec![0u16; nvars];
                for j in subset {
                    m[j] = 1;
                }
                terms.insert(m, BigInt::one());
            }
        }
        RootPoly {
            nvars,
            max_deg,
            terms,
        }
    }

    /// Coefficients of the weakly decreasing monomials of degree `d`; for a
    /// symmetric polynomial these are its monomial-basis coefficients.
    pub fn dominant_part(&self, d: usize) -> BTreeMap<Monomial, BigInt> {
        self.terms
            .iter()
            .filter(|(m, _)| deg(m) == d && m.windows(2).all(|w| w[0] >= w[1]))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    #[cfg(test)]
    pub fn terms(&self) -> &HashMap<Monomial, BigInt> {
        &self.terms
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
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

/// All exponent vectors `a` in `N^k` with `|a| = total`.
pub(crate) fn compositions(k: usize, total: usize) -> Vec<Vec<u32>> {
    fn rec(k: usize, remaining: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == k {
            cur.push(remaining as u32);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in (0..=remaining).rev() {
            cur.push(v as u32);
            rec(k, remaining - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(k, total, &mut Vec::new(), &mut out);
    out
}

/// A polynomial in the elementary symmetric polynomials `e_1..e_k`, keyed by
/// exponent vectors `(n_1, .., n_k)` meaning `prod e_i^{n_i}`.
pub(crate) type ElementaryPoly = BTreeMap<Vec<u32>, BigInt>;

/// Rewrites the homogeneous degree-`d` part of a symmetric polynomial in the
/// elementary basis by repeatedly cancelling the lexicographically leading
/// monomial.
pub(crate) fn to_elementary(poly: &RootPoly, d: usize) -> ElementaryPoly {
    let k = poly.nvars;
    let mut remaining = poly.dominant_part(d);
    let mut cache: HashMap<Vec<u32>, BTreeMap<Monomial, BigInt>> = HashMap::new();
    let mut out = ElementaryPoly::new();
    while let Some((lead, c)) = remaining
        .iter()
        .next_back()
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        // e^beta with beta_i = lead_i - lead_{i+1} has leading monomial `lead`
        let beta: Vec<u32> = (0..k)
            .map(|i| u32::from(lead[i]) - u32::from(lead.get(i + 1).copied().unwrap_or(0)))
            .collect();
        let expansion = cache.entry(beta.clone()).or_insert_with(|| {
            let mut p = RootPoly::one(k, d);
            for (i, &b) in beta.iter().enumerate() {
                let e = RootPoly::elementary(k, i + 1, d);
                for _ in 0..b {
                    p = p.mul(&e);
                }
            }
            p.dominant_part(d)
        });
        for (m, v) in expansion.iter() {
            let entry = remaining.entry(m.clone()).or_default();
            *entry -= &c * v;
            if entry.is_zero() {
                remaining.remove(m);
            }
        }
        *out.entry(beta).or_default() += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `prod_{|a| = k} (1 + a . x)` over the `k`-th symmetric power's roots,
/// truncated at total degree `max_deg`.
pub(crate) fn sym_power_root_product(nvars: usize, k: usize, max_deg: usize) -> RootPoly {
    let mut p = RootPoly::one(nvars, max_deg);
    for a in compositions(nvars, k) {
        p.mul_linear(&a);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(2, 3).len(), 4);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(1, 5), vec![vec![5]]);
        assert!(compositions(3, 2)
            .iter()
            .all(|a| a.iter().sum::<u32>() == 2));
    }

    #[test]
    fn power_sum_in_elementary_basis() {
        // p_2 = e_1^2 - 2 e_2 in any number of variables >= 2
        let mut p2 = RootPoly::one(3, 2);
        p2.terms.clear();
        for i in 0..3 {
            let mut m = vec![0; 3];
            m[i] = 2;
            p2.terms.insert(m, BigInt::one());
        }
        let e = to_elementary(&p2, 2);
        assert_eq!(e.get(&vec![2, 0, 0]), Some(&BigInt::from(1)));
        assert_eq!(e.get(&vec![0, 1, 0]), Some(&BigInt::from(-2)));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn square_of_rank_two_roots() {
        // Sym^2 of rank 2: roots 2a, a+b, 2b; c_1 = 3 e_1, c_2 = 2 e_1^2 + 4 e_2
        let p = sym_power_root_product(2, 2, 3);
        let c1 = to_elementary(&p, 1);
        assert_eq!(c1, BTreeMap::from([(vec![1, 0], BigInt::from(3))]));
        let c2 = to_elementary(&p, 2);
        assert_eq!(
            c2,
            BTreeMap::from([(vec![2, 0], BigInt::from(2)), (vec![0, 1], BigInt::from(4))])
        );
        // c_3 = 2a (a+b) 2b = 4 e_1 e_2
        let c3 = to_elementary(&p, 3);
        assert_eq!(c3, BTreeMap::from([(vec![1, 1], BigInt::from(4))]));
        assert!(p.terms().keys().all(|m| deg(m) <= 3));
    }
}
