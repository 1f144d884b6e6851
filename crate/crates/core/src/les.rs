//! Dimension chase through the long exact cohomology sequence of
//! `0 → S → M → Q → 0` when two of the three terms are known.
//!
//! The free data are the ranks of the maps between the two known columns:
//! connecting maps `H^i(Q) → H^{i+1}(S)` when `M` is unknown, the maps
//! `H^i(S) → H^i(M)` when `Q` is unknown, and `H^i(M) → H^i(Q)` when `S` is
//! unknown. Each rank is resolved, in order, by zero patterns, by explicitly
//! known ranks, by declared facts about the unknown term and finally, only on
//! request, by taking it maximal.

use serde::Serialize;

use crate::bundles::Slot;
use crate::cohom_vec::Cohom;
use crate::error::{Error, Result};

const ENUMERATION_CAP: u128 = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RankInfo {
    Free,
    Known(u64),
    AtLeast(u64),
}

#[derive(Clone, Debug)]
pub struct LesProblem<const N: usize> {
    pub unknown: Slot,
    /// Cohomology of the three terms; the entry at `unknown` is ignored.
    pub known: [Cohom<N>; 3],
    /// One entry per free map; missing entries are `Free`.
    pub ranks: Vec<RankInfo>,
    /// `(degree, dimension)` facts about the unknown term.
    pub facts: Vec<(usize, u64)>,
    pub generic: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FreeRank {
    pub map: String,
    pub lo: u64,
    pub hi: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LesSolution<const N: usize> {
    pub lower: Cohom<N>,
    pub upper: Cohom<N>,
    pub free: Vec<FreeRank>,
}

impl<const N: usize> LesSolution<N> {
    pub fn value(&self) -> Option<Cohom<N>> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

struct Shape<const N: usize> {
    /// `h^i(unknown) = c[i] - Σ_{k ∈ adj[i]} r_k`
    c: [u64; N],
    adj: Vec<Vec<usize>>,
    names: Vec<String>,
    bounds: Vec<(u64, u64)>,
}

fn shape<const N: usize>(p: &LesProblem<N>) -> Result<Shape<N>> {
    let [s, m, q] = p.known.map(|h| h.0);
    let at = |v: &[u64; N], i: isize| -> u64 {
        if i < 0 || i as usize >= N {
            0
        } else {
            v[i as usize]
        }
    };
    let mut c = [0u64; N];
    let mut adj = vec![vec![]; N];
    let mut names = vec![];
    let mut bounds = vec![];
    match p.unknown {
        Slot::Mid => {
            for i in 0..N {
                c[i] = s[i] + q[i];
                if i > 0 {
                    adj[i].push(i - 1);
                }
                if i + 1 < N {
                    adj[i].push(i);
                }
            }
            for k in 0..N - 1 {
                names.push(format!("H^{k}(Q) -> H^{}(S)", k + 1));
                bounds.push((0, q[k].min(s[k + 1])));
            }
        }
        Slot::Quot => {
            for i in 0..N {
                c[i] = m[i] + at(&s, i as isize + 1);
                adj[i].push(i);
                if i + 1 < N {
                    adj[i].push(i + 1);
                }
            }
            for k in 0..N {
                names.push(format!("H^{k}(S) -> H^{k}(M)"));
                bounds.push((0, s[k].min(m[k])));
            }
            if s[0] > m[0] {
                return Err(Error::InconsistentFacts(format!(
                    "H^0 of the subobject ({}) does not inject into H^0 of the middle term ({})",
                    s[0], m[0]
                )));
            }
            bounds[0] = (s[0], s[0]);
        }
        Slot::Sub => {
            for i in 0..N {
                c[i] = at(&q, i as isize - 1) + m[i];
                if i > 0 {
                    adj[i].push(i - 1);
                }
                adj[i].push(i);
            }
            for k in 0..N {
                names.push(format!("H^{k}(M) -> H^{k}(Q)"));
                bounds.push((0, m[k].min(q[k])));
            }
            if q[N - 1] > m[N - 1] {
                return Err(Error::InconsistentFacts(format!(
                    "H^{} of the middle term ({}) cannot surject onto the quotient ({})",
                    N - 1,
                    m[N - 1],
                    q[N - 1]
                )));
            }
            bounds[N - 1] = (q[N - 1], q[N - 1]);
        }
    }
    Ok(Shape { c, adj, names, bounds })
}

fn value_at<const N: usize>(sh: &Shape<N>, i: usize, r: &[u64]) -> i128 {
    sh.c[i] as i128 - sh.adj[i].iter().map(|&k| r[k] as i128).sum::<i128>()
}

pub fn les_chase<const N: usize>(p: &LesProblem<N>) -> Result<LesSolution<N>> {
    let mut sh = shape(p)?;
    let k = sh.bounds.len();

    // explicit ranks
    for (idx, info) in p.ranks.iter().enumerate().take(k) {
        let (lo, hi) = sh.bounds[idx];
        let (nlo, nhi) = match *info {
            RankInfo::Free => (lo, hi),
            RankInfo::Known(r) => (r, r),
            RankInfo::AtLeast(r) => (lo.max(r), hi),
        };
        if nlo > nhi || nlo < lo || nhi > hi {
            return Err(Error::InconsistentFacts(format!(
                "rank of {} must lie in [{lo}, {hi}], got {info:?}",
                sh.names[idx]
            )));
        }
        sh.bounds[idx] = (nlo, nhi);
    }

    // declared facts: enumerate the maps they touch
    let mut involved: Vec<usize> = p
        .facts
        .iter()
        .flat_map(|&(d, _)| sh.adj.get(d).cloned().unwrap_or_default())
        .filter(|&m| sh.bounds[m].0 < sh.bounds[m].1)
        .collect();
    involved.sort_unstable();
    involved.dedup();
    for &(d, _) in &p.facts {
        if d >= N {
            return Err(Error::InconsistentFacts(format!("fact in degree {d}")));
        }
    }
    let combos: u128 = involved.iter().map(|&m| (sh.bounds[m].1 - sh.bounds[m].0 + 1) as u128).product();
    if combos > ENUMERATION_CAP {
        return Err(Error::Unsupported(format!("{combos} rank combinations to enumerate")));
    }
    let mut feasible: Vec<Vec<u64>> = vec![];
    let mut r: Vec<u64> = sh.bounds.iter().map(|b| b.0).collect();
    loop {
        let ok = p.facts.iter().all(|&(d, v)| value_at(&sh, d, &r) == v as i128);
        if ok {
            feasible.push(involved.iter().map(|&m| r[m]).collect());
        }
        // odometer over the involved maps
        let mut pos = 0;
        loop {
            if pos == involved.len() {
                break;
            }
            let m = involved[pos];
            if r[m] < sh.bounds[m].1 {
                r[m] += 1;
                break;
            }
            r[m] = sh.bounds[m].0;
            pos += 1;
        }
        if pos == involved.len() {
            break;
        }
    }
    if feasible.is_empty() {
        return Err(Error::InconsistentFacts(format!(
            "no choice of ranks is compatible with the declared facts {:?}",
            p.facts
        )));
    }
    for (j, &m) in involved.iter().enumerate() {
        let lo = feasible.iter().map(|t| t[j]).min().expect("nonempty");
        let hi = feasible.iter().map(|t| t[j]).max().expect("nonempty");
        sh.bounds[m] = (lo, hi);
    }

    if p.generic {
        // maximal ranks; among fact-compatible tuples take the largest
        let best = feasible
            .iter()
            .max_by_key(|t| (t.iter().sum::<u64>(), (*t).clone()))
            .expect("nonempty");
        for (j, &m) in involved.iter().enumerate() {
            sh.bounds[m] = (best[j], best[j]);
        }
        for b in &mut sh.bounds {
            b.0 = b.1;
        }
    }

    let mut lower = [0u64; N];
    let mut upper = [0u64; N];
    let lo: Vec<u64> = sh.bounds.iter().map(|b| b.0).collect();
    let hi: Vec<u64> = sh.bounds.iter().map(|b| b.1).collect();
    for i in 0..N {
        let u = value_at(&sh, i, &lo);
        let l = value_at(&sh, i, &hi).max(0);
        if u < 0 {
            return Err(Error::InconsistentFacts(format!("negative dimension in degree {i}")));
        }
        upper[i] = u as u64;
        lower[i] = l as u64;
    }
    let free = sh
        .bounds
        .iter()
        .zip(&sh.names)
        .filter(|(b, _)| b.0 < b.1)
        .map(|(b, n)| FreeRank { map: n.clone(), lo: b.0, hi: b.1 })
        .collect();
    Ok(LesSolution { lower: Cohom(lower), upper: Cohom(upper), free })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(unknown: Slot, known: [[u64; 5]; 3]) -> LesProblem<5> {
        LesProblem { unknown, known: known.map(Cohom), ranks: vec![], facts: vec![], generic: false }
    }

    #[test]
    fn forced_by_zeros() {
        // cokernel of O(-1,1)^2 → O(0,1)^4: the kernel term is acyclic
        let p = problem(Slot::Quot, [[0; 5], [12, 0, 0, 0, 0], [0; 5]]);
        assert_eq!(les_chase(&p).unwrap().value(), Some(Cohom([12, 0, 0, 0, 0])));
    }

    #[test]
    fn free_connecting_map() {
        let p = problem(Slot::Mid, [[0, 3, 0, 0, 0], [0; 5], [3, 0, 0, 0, 0]]);
        let s = les_chase(&p).unwrap();
        assert_eq!(s.value(), None);
        assert_eq!(s.lower, Cohom([0; 5]));
        assert_eq!(s.upper, Cohom([3, 3, 0, 0, 0]));
        assert_eq!(s.free.len(), 1);

        let mut g = p.clone();
        g.generic = true;
        assert_eq!(les_chase(&g).unwrap().value(), Some(Cohom([0; 5])));

        let mut f = p.clone();
        f.facts = vec![(0, 1)];
        assert_eq!(les_chase(&f).unwrap().value(), Some(Cohom([1, 1, 0, 0, 0])));

        let mut k = p.clone();
        k.ranks = vec![RankInfo::AtLeast(1)];
        assert_eq!(les_chase(&k).unwrap().upper, Cohom([2, 2, 0, 0, 0]));

        let mut bad = p;
        bad.facts = vec![(0, 5)];
        assert!(matches!(les_chase(&bad), Err(Error::InconsistentFacts(_))));
    }

    #[test]
    fn kernel_top_map_is_onto() {
        let p = problem(Slot::Sub, [[0; 5], [0, 0, 0, 0, 6], [0, 0, 0, 0, 6]]);
        assert_eq!(les_chase(&p).unwrap().value(), Some(Cohom([0; 5])));
        let p = problem(Slot::Sub, [[0; 5], [0, 0, 0, 0, 1], [0, 0, 0, 0, 6]]);
        assert!(les_chase(&p).is_err());
    }
}
