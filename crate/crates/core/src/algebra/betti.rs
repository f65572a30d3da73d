//! Graded Betti tables: Hochster's formula over `R` and Koszul homology over
//! the free-variable ring.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::artinian::GradedAlgebraModel;
use crate::complex::{combinations, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactla::{rat, QMatrix};
use crate::homology::reduced_betti;

/// Largest vertex count for which [`hochster_betti`] scans all subsets.
pub const HOCHSTER_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    /// Over the full polynomial ring, for `R/I_Δ`.
    #[serde(rename = "R")]
    OverR,
    /// Over the free variables, for `R/(I_Δ + (Θ, ℓ))`.
    #[serde(rename = "Rbar")]
    OverRBar,
}

/// `β_{i,j}`, keyed by `(i, j)`; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub ring: Ring,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub ring: Ring,
    pub entries: Vec<[u64; 3]>,
}

impl BettiTable {
    pub fn new(ring: Ring) -> Self {
        BettiTable { ring, entries: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, j: usize, val: u64) {
        if val > 0 {
            *self.entries.entry((i, j)).or_insert(0) += val;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Row `j` of the displayed table: `β_{i,i+j}` for `i = from..=to`.
    pub fn row(&self, j: usize, from: usize, to: usize) -> Vec<u64> {
        (from..=to).map(|i| self.get(i, i + j)).collect()
    }

    pub fn max_i(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn max_row(&self) -> usize {
        self.entries.keys().map(|(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson { ring: self.ring, entries: self.entries.iter().map(|(&(i, j), &v)| [i as u64, j as u64, v]).collect() }
    }

    pub fn from_json(j: &BettiJson) -> Self {
        let mut t = BettiTable::new(j.ring);
        for &[i, jj, v] in &j.entries {
            t.add(i as usize, jj as usize, v);
        }
        t
    }

    /// Cells `(row, col)` where a zero is printed: the bounding box of the
    /// nonzero cells with `row, col >= 1`, leaving out the extreme corner
    /// `(max row, max col)` when it is alone in its row and column (the top
    /// Betti number of a Gorenstein quotient).
    fn zero_box(&self) -> Option<(usize, usize, usize, usize)> {
        let cells: Vec<(usize, usize)> = self.entries.keys().map(|&(i, j)| (j - i, i)).collect();
        let corner = (self.max_row(), self.max_i());
        let lonely = cells.contains(&corner)
            && cells.iter().filter(|x| x.0 == corner.0 || x.1 == corner.1).count() == 1;
        let inner: Vec<(usize, usize)> = cells
            .iter()
            .copied()
            .filter(|&(r, c)| r >= 1 && c >= 1 && !(lonely && (r, c) == corner))
            .collect();
        if inner.is_empty() {
            return None;
        }
        let r0 = inner.iter().map(|x| x.0).min().unwrap();
        let r1 = inner.iter().map(|x| x.0).max().unwrap();
        let c0 = inner.iter().map(|x| x.1).min().unwrap();
        let c1 = inner.iter().map(|x| x.1).max().unwrap();
        Some((r0, r1, c0, c1))
    }

    /// Text table: row `j`, column `i` holds `β_{i,i+j}`. Zeros are printed
    /// inside the main block and left blank elsewhere.
    pub fn render(&self) -> String {
        let cols = self.max_i();
        let rows = self.max_row();
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .chain(std::iter::once(cols.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows.to_string().len() + 1;
        let zero_box = self.zero_box();
        let mut out = String::new();
        let mut header = " ".repeat(label);
        for i in 0..=cols {
            header += &format!(" {i:>width$}");
        }
        out += header.trim_end();
        out.push('\n');
        for j in 0..=rows {
            let mut line = format!("{:>label$}", format!("{j}:"));
            for i in 0..=cols {
                let v = self.get(i, i + j);
                let show_zero = zero_box.is_some_and(|(r0, r1, c0, c1)| (r0..=r1).contains(&j) && (c0..=c1).contains(&i));
                let cell = if v > 0 || show_zero { v.to_string() } else { String::new() };
                line += &format!(" {cell:>width$}");
            }
            out += line.trim_end();
            out.push('\n');
        }
        out
    }
}

pub fn hochster_betti(c: &SimplicialComplex) -> Result<BettiTable> {
    hochster_betti_with_cap(c, HOCHSTER_CAP)
}

/// `β_{i,j}(R/I_Δ) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W)`.
pub fn hochster_betti_with_cap(c: &SimplicialComplex, cap: usize) -> Result<BettiTable> {
    let vs = c.vertices().to_vec();
    let n = vs.len();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let totals = (0u64..1u64 << n)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<(usize, usize), u64>, bits| {
            let w = Face::from_vertices((0..n).filter(|k| bits >> k & 1 == 1).map(|k| vs[k]));
            let j = w.len();
            let sub = c.induced(w);
            for (idx, &b) in reduced_betti(&sub).iter().enumerate() {
                // idx holds H̃_{idx-1}; i = j - (idx - 1) - 1
                if b > 0 && j >= idx {
                    *acc.entry((j - idx, j)).or_insert(0) += b as u64;
                }
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut t = BettiTable::new(Ring::OverR);
    for ((i, j), v) in totals {
        t.add(i, j, v);
    }
    Ok(t)
}

/// Koszul homology of the free variables acting on the Artinian reduction:
/// `β_{i,j} = dim H_i(y; A)_j`.
pub fn koszul_betti(model: &GradedAlgebraModel) -> BettiTable {
    let m = model.n_free();
    let top = model.top_degree();
    let units: Vec<Vec<_>> = (0..m)
        .map(|s| (0..m).map(|t| rat(i64::from(s == t))).collect())
        .collect();
    let mult: Vec<Vec<QMatrix>> =
        (0..=top).map(|k| units.iter().map(|u| model.multiplication_by_free_form(k, u)).collect()).collect();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=m)
        .map(|i| {
            let idx: Vec<usize> = (0..m).collect();
            let mut out = Vec::new();
            combinations(&idx, i, &mut |s| out.push(s.to_vec()));
            out
        })
        .collect();
    let dim_k = |i: usize, j: usize| -> usize {
        if j < i || j - i > top {
            0
        } else {
            subsets[i].len() * model.dim(j - i)
        }
    };
    // rank of d_{i,j}: K_{i,j} -> K_{i-1,j}
    let rank_d = |i: usize, j: usize| -> usize {
        if i == 0 || i > m || dim_k(i, j) == 0 || dim_k(i - 1, j) == 0 {
            return 0;
        }
        let a = j - i;
        let (src, dst) = (model.dim(a), model.dim(a + 1));
        let index: HashMap<&Vec<usize>, usize> = subsets[i - 1].iter().enumerate().map(|(k, s)| (s, k)).collect();
        let mut mat = QMatrix::zeros(subsets[i - 1].len() * dst, subsets[i].len() * src);
        for (si, s) in subsets[i].iter().enumerate() {
            for (t, &var) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(t);
                let ri = index[&rest];
                let sign = if t % 2 == 0 { rat(1) } else { rat(-1) };
                let mv = &mult[a][var];
                for b in 0..src {
                    for r in 0..dst {
                        let x = &mv[(r, b)];
                        if *x != rat(0) {
                            mat[(ri * dst + r, si * src + b)] += &sign * x;
                        }
                    }
                }
            }
        }
        mat.rank()
    };
    let mut t = BettiTable::new(Ring::OverRBar);
    for i in 0..=m {
        for j in i..=i + top {
            let dim = dim_k(i, j);
            if dim == 0 {
                continue;
            }
            let b = dim - rank_d(i, j) - rank_d(i + 1, j);
            t.add(i, j, b as u64);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::artinian::{artinian_reduction, Variant};
    use crate::geom::{cross_polytope, simplex_boundary};

    #[test]
    fn full_simplex_table() {
        let c = SimplicialComplex::simplex(Face::from_vertices([1, 2, 3]));
        let t = hochster_betti(&c).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
    }

    #[test]
    fn octahedron_left_table() {
        let t = hochster_betti(&cross_polytope(3).unwrap().complex).unwrap();
        // complete intersection of three quadrics
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 3);
        assert_eq!(t.get(2, 4), 3);
        assert_eq!(t.get(3, 6), 1);
        assert_eq!(t.entries().count(), 4);
    }

    #[test]
    fn simplex_koszul_is_trivial() {
        let model = artinian_reduction(&simplex_boundary(3).unwrap(), Variant::ThetaEll).unwrap();
        let t = koszul_betti(&model);
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
    }

    #[test]
    fn cap_is_enforced() {
        let c = cross_polytope(3).unwrap().complex;
        assert!(matches!(hochster_betti_with_cap(&c, 5), Err(Error::CapExceeded { n: 6, cap: 5 })));
    }

    #[test]
    fn render_layout() {
        let t = hochster_betti(&cross_polytope(4).unwrap().complex).unwrap();
        let text = t.render();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "   0 1 2 3 4");
        assert_eq!(lines[1], "0: 1");
        assert_eq!(lines[2], "1:   4 0 0");
        assert_eq!(lines[3], "2:   0 6 0");
        assert_eq!(lines[4], "3:   0 0 4");
        assert_eq!(lines[5], "4:         1");
    }

    #[test]
    fn json_round_trip() {
        let t = hochster_betti(&cross_polytope(3).unwrap().complex).unwrap();
        let j = serde_json::to_string(&t.to_json()).unwrap();
        assert!(j.starts_with("{\"ring\":\"R\""));
        let back: BettiJson = serde_json::from_str(&j).unwrap();
        assert_eq!(BettiTable::from_json(&back), t);
    }
}
