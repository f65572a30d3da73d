//! Exponent vectors in graded-lex order.

use std::collections::HashMap;

use crate::complex::{Face, SimplicialComplex, Vertex};

pub type Exponents = Vec<u8>;

/// All exponent vectors of length `n` and total degree `k`, lexicographically
/// decreasing (`x_1^k` first).
pub fn all_monomials(n: usize, k: usize) -> Vec<Exponents> {
    fn go(n: usize, left: usize, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if cur.len() == n - 1 {
            cur.push(left as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u8);
            go(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, k, &mut Vec::with_capacity(n), &mut out);
    out
}

pub fn degree(e: &[u8]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

/// Support of an exponent vector over the given variable labels.
pub fn support(e: &[u8], vertices: &[Vertex]) -> Face {
    Face::from_vertices(e.iter().zip(vertices).filter(|(x, _)| **x > 0).map(|(_, v)| *v))
}

pub fn is_squarefree(e: &[u8]) -> bool {
    e.iter().all(|&x| x <= 1)
}

/// An ordered monomial basis of one degree with a reverse index.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    degree: usize,
    n: usize,
    monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
}

impl MonomialBasis {
    fn from_list(n: usize, degree: usize, monomials: Vec<Exponents>) -> Self {
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { degree, n, monomials, index }
    }

    /// Every monomial of degree `k` in `n` variables.
    pub fn all(n: usize, k: usize) -> Self {
        Self::from_list(n, k, all_monomials(n, k))
    }

    /// Degree-`k` monomials in the vertex variables of `c` whose support is a
    /// face of `c`.
    pub fn supported(c: &SimplicialComplex, k: usize) -> Self {
        let vs = c.vertices();
        let list = all_monomials(vs.len(), k).into_iter().filter(|e| c.contains(support(e, vs))).collect();
        Self::from_list(vs.len(), k, list)
    }

    /// Degree-`k` monomials whose support is not a face.
    pub fn unsupported(c: &SimplicialComplex, k: usize) -> Self {
        let vs = c.vertices();
        let list = all_monomials(vs.len(), k).into_iter().filter(|e| !c.contains(support(e, vs))).collect();
        Self::from_list(vs.len(), k, list)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &Exponents {
        &self.monomials[i]
    }

    pub fn index_of(&self, e: &[u8]) -> Option<usize> {
        self.index.get(e).copied()
    }
}
