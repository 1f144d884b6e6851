//! Full exceptional collections on X and F, the orthogonality checks that
//! certify them, and Beilinson E1 tables.
//!
//! A collection is a list of objects `E_i` with shifts `k_i` and a list of
//! duals `F_i` with `H^{k+k_i}(E_i ⊗ F_j) = 1` when `i = j = k` and zero
//! otherwise. The E1 table of `A` has `h^{q+k_i}(E_i ⊗ A)` at `p = -i`,
//! labeled by `F_i`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bundles::{BundleExpr, FactorBundle};
use crate::chow::{ch, chi, ChowClass};
use crate::cohomology::{cohom, cohom_bounds};
use crate::error::{Error, Result};
use crate::flag::{chi_flag, cohom_flag, FlagBundle};
use crate::report::Check;
use crate::ulrich::{Layer, BALANCE_TWISTS};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Variety {
    X,
    F,
}

impl Variety {
    pub fn dim(self) -> usize {
        match self {
            Variety::X => 4,
            Variety::F => 3,
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variety::X => "P2xP2",
            Variety::F => "F",
        })
    }
}

/// On F every expression stands for its restriction.
#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalCollection {
    pub name: String,
    pub variety: Variety,
    pub objects: Vec<(BundleExpr, i64)>,
    pub duals: Vec<BundleExpr>,
}

pub const COLLECTIONS: [&str; 7] = ["col13", "col13t", "col15", "col15-fixed", "col15t", "flag", "flag-fixed"];

fn l(m: i64, n: i64) -> BundleExpr {
    BundleExpr::line(m, n)
}

fn bx(a: FactorBundle, b: FactorBundle) -> BundleExpr {
    BundleExpr::boxed(a, b)
}

use FactorBundle as Fb;

const SHIFTS_X: [i64; 9] = [0, 0, -1, -1, -2, -3, -3, -4, -4];
const SHIFTS_F: [i64; 6] = [0, 0, -1, -1, -2, -2];

fn with_shifts(objs: Vec<BundleExpr>, shifts: &[i64]) -> Vec<(BundleExpr, i64)> {
    objs.into_iter().zip(shifts.iter().copied()).collect()
}

fn col13_duals() -> Vec<BundleExpr> {
    vec![
        l(0, 0),
        bx(Fb::omega(1), Fb::o(0)),
        bx(Fb::o(0), Fb::omega(1)),
        bx(Fb::omega(1), Fb::omega(1)),
        l(-1, 0),
        l(0, -1),
        bx(Fb::o(-1), Fb::omega(1)),
        bx(Fb::omega(1), Fb::o(-1)),
        l(-1, -1),
    ]
}

fn col13() -> ExceptionalCollection {
    let objs = [(0, 0), (-1, 0), (0, -1), (-1, -1), (-2, 0), (0, -2), (-2, -1), (-1, -2), (-2, -2)];
    ExceptionalCollection {
        name: "col13".into(),
        variety: Variety::X,
        objects: with_shifts(objs.iter().map(|&(m, n)| l(m, n)).collect(), &SHIFTS_X),
        duals: col13_duals(),
    }
}

/// As printed: `O(-1,-1)` twice, duals identical to col13.
fn col15() -> ExceptionalCollection {
    let objs = vec![
        l(0, 0),
        l(-1, 0),
        l(0, -1),
        l(-1, -1),
        l(-1, -1),
        l(-2, -1),
        bx(Fb::omega(0), Fb::o(-2)),
        bx(Fb::o(-2), Fb::omega(0)),
        l(-2, -2),
    ];
    ExceptionalCollection { name: "col15".into(), variety: Variety::X, objects: with_shifts(objs, &SHIFTS_X), duals: col13_duals() }
}

fn col15_fixed() -> ExceptionalCollection {
    let objs = vec![
        l(0, 0),
        l(-1, 0),
        l(0, -1),
        l(-1, -1),
        l(-1, -2),
        l(-2, -1),
        bx(Fb::omega(0), Fb::o(-2)),
        bx(Fb::o(-2), Fb::omega(0)),
        l(-2, -2),
    ];
    let duals = vec![
        l(0, 0),
        bx(Fb::omega(1), Fb::o(0)),
        bx(Fb::o(0), Fb::omega(1)),
        bx(Fb::omega(1), Fb::omega(1)),
        l(1, -1),
        l(-1, 1),
        l(0, -1),
        l(-1, 0),
        l(-1, -1),
    ];
    ExceptionalCollection { name: "col15-fixed".into(), variety: Variety::X, objects: with_shifts(objs, &SHIFTS_X), duals }
}

fn g1(a: i64, b: i64) -> BundleExpr {
    FlagBundle::g1(a, b).lift().clone()
}

fn g2(a: i64, b: i64) -> BundleExpr {
    FlagBundle::g2(a, b).lift().clone()
}

/// As printed in §5.
fn flag_printed() -> ExceptionalCollection {
    let objs = vec![l(0, 0), l(0, -1), l(-1, 0), g1(-1, -1), g2(-1, -1), l(-1, -1)];
    let duals = vec![l(0, 0), g2(0, -1), g1(-1, 0), l(0, -1), l(-1, 0), l(-1, -1)];
    ExceptionalCollection { name: "flag".into(), variety: Variety::F, objects: with_shifts(objs, &SHIFTS_F), duals }
}

/// The pair whose E1 table is the one displayed in Theorem 5.1.
fn flag_fixed() -> ExceptionalCollection {
    let objs = vec![l(0, 0), l(0, -1), l(-1, 0), g1(0, -1), g2(-1, 0), l(-1, -1)];
    let duals = vec![l(0, 0), g2(0, 0), g1(0, 0), l(0, -1), l(-1, 0), l(-1, -1)];
    ExceptionalCollection { name: "flag-fixed".into(), variety: Variety::F, objects: with_shifts(objs, &SHIFTS_F), duals }
}

pub fn builtin(name: &str) -> Result<ExceptionalCollection> {
    Ok(match name {
        "col13" => col13(),
        "col13t" => col13().transposed("col13t"),
        "col15" => col15(),
        "col15-fixed" => col15_fixed(),
        "col15t" => col15_fixed().transposed("col15t"),
        "flag" => flag_printed(),
        "flag-fixed" => flag_fixed(),
        _ => return Err(Error::UnknownIdentifier(name.to_string())),
    })
}

/// Cohomology on the collection's variety, padded to length 5.
pub fn cohomology_on(variety: Variety, e: &BundleExpr) -> Result<[u64; 5]> {
    Ok(match variety {
        Variety::X => cohom(e)?.0,
        Variety::F => {
            let h = cohom_flag(&FlagBundle::res(e.clone()))?.0;
            [h[0], h[1], h[2], h[3], 0]
        }
    })
}

fn show(h: &[u64]) -> String {
    let parts: Vec<String> = h.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

impl ExceptionalCollection {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Swap the roles of objects and duals, keeping the shifts. The relation
    /// is symmetric in the two lists, so this is again a Beilinson pair.
    pub fn transposed(&self, name: &str) -> Self {
        let objects = self.duals.iter().cloned().zip(self.objects.iter().map(|(_, k)| *k)).collect();
        let duals = self.objects.iter().map(|(e, _)| e.clone()).collect();
        ExceptionalCollection { name: name.into(), variety: self.variety, objects, duals }
    }

    fn expected(&self, i: usize, j: usize) -> Result<[u64; 5]> {
        let mut h = [0u64; 5];
        if i == j {
            let d = i as i64 + self.objects[i].1;
            if d < 0 || d > self.variety.dim() as i64 {
                return Err(Error::CheckFailed(format!("{}: shift of E{i} puts the pairing out of range", self.name)));
            }
            h[d as usize] = 1;
        }
        Ok(h)
    }

    /// One check per pair `(E_i, F_j)`.
    pub fn orthogonality(&self) -> Result<Vec<Check>> {
        let n = self.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let (e, _) = &self.objects[i];
                let got = cohomology_on(self.variety, &e.tensor(&self.duals[j])?)?;
                let want = self.expected(i, j)?;
                let inputs = format!("{}: E{i} = {e}, F{j} = {}", self.name, self.duals[j]);
                let len = self.variety.dim() + 1;
                Ok(Check::compare("orthogonality", &inputs, show(&want[..len]), show(&got[..len])))
            })
            .collect()
    }

    /// `Ext(E_i, E_i)` is the scalars and `Ext(E_i, E_j) = 0` for `i > j`,
    /// with `E_i` the duals of the listed objects.
    pub fn exceptionality(&self) -> Result<Vec<Check>> {
        let n = self.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..=i).map(move |j| (i, j))).collect();
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let (ei, ej) = (&self.objects[i].0, &self.objects[j].0);
                let got = cohomology_on(self.variety, &ei.tensor(&ej.dual())?)?;
                let mut want = [0u64; 5];
                if i == j {
                    want[0] = 1;
                }
                let inputs = format!("{}: E{i} = {ei}, E{j} = {ej}", self.name);
                let len = self.variety.dim() + 1;
                Ok(Check::compare("exceptionality", &inputs, show(&want[..len]), show(&got[..len])))
            })
            .collect()
    }

    /// The relation read from the other side: duals against objects.
    pub fn dual_characterization(&self) -> Result<Vec<Check>> {
        let t = self.transposed(&format!("{} (transposed)", self.name));
        t.orthogonality()
    }
}

/// A built-in collection that passed orthogonality; otherwise the failing
/// pairs, verbatim.
pub fn verified(name: &str) -> Result<ExceptionalCollection> {
    let c = builtin(name)?;
    let bad: Vec<String> = c.orthogonality()?.iter().filter(|ch| !ch.passed()).map(|ch| ch.to_string()).collect();
    if !bad.is_empty() {
        return Err(Error::CheckFailed(format!("{} fails {} of {} checks:\n{}", name, bad.len(), c.len() * c.len(), bad.join("\n"))));
    }
    Ok(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct E1Cell {
    pub p: i64,
    pub q: i64,
    /// `None` when the cohomology could not be determined.
    pub dim: Option<u64>,
    pub label: BundleExpr,
}

#[derive(Clone, Debug, Serialize)]
pub struct E1Table {
    pub collection: String,
    pub variety: Variety,
    pub input: BundleExpr,
    pub n: usize,
    /// Column-major: `cells[i * (n + 1) + q]` sits at `p = -i`.
    pub cells: Vec<E1Cell>,
}

impl E1Table {
    pub fn get(&self, p: i64, q: i64) -> Option<&E1Cell> {
        let (i, n) = (-p, self.n as i64);
        if !(0..=n).contains(&i) || !(0..=n).contains(&q) {
            return None;
        }
        self.cells.get((i * (n + 1) + q) as usize)
    }

    pub fn dim(&self, p: i64, q: i64) -> Option<u64> {
        self.get(p, q).and_then(|c| c.dim)
    }

    pub fn indeterminate(&self) -> Vec<(i64, i64)> {
        self.cells.iter().filter(|c| c.dim.is_none()).map(|c| (c.p, c.q)).collect()
    }

    pub fn nonzero(&self) -> Vec<&E1Cell> {
        self.cells.iter().filter(|c| c.dim != Some(0)).collect()
    }
}

impl fmt::Display for E1Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n as i64;
        writeln!(f, "E1 table of {} over {} ({})", self.input, self.collection, self.variety)?;
        for q in (0..=n).rev() {
            write!(f, "q={q:<2}|")?;
            for p in -n..=0 {
                match self.dim(p, q) {
                    Some(d) => write!(f, " {d:>3}")?,
                    None => write!(f, "   ?")?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "     ")?;
        for p in -n..=0 {
            write!(f, " {p:>3}")?;
        }
        writeln!(f)?;
        for i in (0..=self.n).rev() {
            writeln!(f, "  p={:<3} {}", -(i as i64), self.cells[i * (self.n + 1)].label)?;
        }
        Ok(())
    }
}

/// `E1^{p,q} = h^{q+k_i}(E_i ⊗ A)` at `p = -i`, labeled `F_i`.
pub fn e1_table(a: &BundleExpr, c: &ExceptionalCollection) -> Result<E1Table> {
    let n = c.len() - 1;
    // per degree: Some(h) when determined, None otherwise
    let columns: Vec<[Option<u64>; 5]> = c
        .objects
        .par_iter()
        .map(|(e, _)| {
            let prod = e.tensor(a)?;
            match cohomology_on(c.variety, &prod) {
                Ok(h) => Ok(h.map(Some)),
                Err(Error::Indeterminate(_)) if c.variety == Variety::X => {
                    let b = cohom_bounds(&prod)?;
                    Ok(std::array::from_fn(|d| (b.lower.0[d] == b.upper.0[d]).then_some(b.lower.0[d])))
                }
                Err(Error::Indeterminate(_)) => Ok([None; 5]),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;
    let mut cells = Vec::with_capacity((n + 1) * (n + 1));
    for (i, h) in columns.iter().enumerate() {
        for q in 0..=n as i64 {
            let d = q + c.objects[i].1;
            let dim = if (0..=c.variety.dim() as i64).contains(&d) { h[d as usize] } else { Some(0) };
            cells.push(E1Cell { p: -(i as i64), q, dim, label: c.duals[i].clone() });
        }
    }
    Ok(E1Table { collection: c.name.clone(), variety: c.variety, input: a.clone(), n, cells })
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The table's alternating sum recovers `A`: exact Chern characters on X,
/// Euler characteristics of twists on F.
pub fn chern_convergence(t: &E1Table) -> Result<Vec<Check>> {
    let inputs = format!("{} over {}", t.input, t.collection);
    if !t.indeterminate().is_empty() {
        return Ok(vec![Check::indeterminate(
            "chern convergence",
            &inputs,
            "determinate table",
            &format!("{} indeterminate cells", t.indeterminate().len()),
        )]);
    }
    let live: Vec<(i64, &E1Cell)> = t
        .nonzero()
        .into_iter()
        .map(|c| (sign(c.p + c.q) * c.dim.unwrap_or(0) as i64, c))
        .collect();
    match t.variety {
        Variety::X => {
            let mut total = ChowClass::zero();
            for (k, c) in &live {
                total = &total + &ch(&c.label)?.scaled(*k as i128);
            }
            Ok(vec![Check::compare("chern convergence", &inputs, ch(&t.input)?, total)])
        }
        Variety::F => {
            let mut out = vec![];
            for (s, u) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, -1), (-1, 2)] {
                let mut total = 0i64;
                for (k, c) in &live {
                    total += k * chi_flag(&FlagBundle::res(c.label.twist(s, u)))?;
                }
                let want = chi_flag(&FlagBundle::res(t.input.twist(s, u)))?;
                out.push(Check::compare("euler convergence", &format!("{inputs}; twist ({s},{u})"), want, total));
            }
            Ok(out)
        }
    }
}

/// Cells of the col13t table that carry a resolution of `V = A(1,1)`,
/// grouped by antidiagonal `p + q = -2, -1, 0`.
const MONAD_CELLS: [&[(i64, i64)]; 3] = [&[(-6, 4), (-7, 5)], &[(-4, 3), (-3, 2), (-5, 4)], &[(-2, 2), (-1, 1)]];

#[derive(Clone, Debug, Serialize)]
pub struct Monad {
    /// `[L2, L1, L0]` in the layout of `ResolutionShape::left`.
    pub layers: [Layer; 3],
    pub rank: i64,
    pub checks: Vec<Check>,
}

impl fmt::Display for Monad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [l2, l1, l0] = &self.layers;
        write!(f, "0 -> {l2} -> {l1} -> {l0} -> V -> 0  (rank {})", self.rank)
    }
}

#[derive(Clone, Debug, Serialize)]
pub enum MonadOutcome {
    Resolution(Monad),
    NotDegenerate(String),
}

/// Read the three-layer resolution off a col13t table of `A = V(-1,-1)`.
pub fn monad_extract(t: &E1Table) -> Result<MonadOutcome> {
    if t.collection != "col13t" {
        return Err(Error::Unsupported(format!("monad extraction reads the col13t layout, not {}", t.collection)));
    }
    if let Some(&(p, q)) = t.indeterminate().first() {
        return Err(Error::Indeterminate(format!("E1 cell ({p},{q}) of {}", t.input)));
    }
    let allowed: Vec<(i64, i64)> = MONAD_CELLS.iter().flat_map(|l| l.iter().copied()).collect();
    let stray: Vec<String> = t
        .nonzero()
        .into_iter()
        .filter(|c| !allowed.contains(&(c.p, c.q)))
        .map(|c| format!("({},{}) = {}", c.p, c.q, c.dim.unwrap_or(0)))
        .collect();
    if !stray.is_empty() {
        return Ok(MonadOutcome::NotDegenerate(format!("entries outside the pattern: {}", stray.join(", "))));
    }
    let layer = |cells: &[(i64, i64)]| -> Result<Layer> {
        let mut out = vec![];
        for &(p, q) in cells {
            let c = t.get(p, q).expect("inside the square");
            let (m, n) = c.label.as_line().ok_or_else(|| Error::Unsupported(format!("label {} is not a line bundle", c.label)))?;
            out.push(((m + 1, n + 1), c.dim.unwrap_or(0)));
        }
        Ok(Layer(out))
    };
    let layers = [layer(MONAD_CELLS[0])?, layer(MONAD_CELLS[1])?, layer(MONAD_CELLS[2])?];
    let rank = layers[2].rank() as i64 - layers[1].rank() as i64 + layers[0].rank() as i64;
    let inputs = t.input.to_string();
    let (a2, b2, mid) = (t.dim(-7, 5).unwrap_or(0), t.dim(-6, 4).unwrap_or(0), t.dim(-3, 2).unwrap_or(0));
    let mut checks = vec![
        Check::compare("positive rank", &inputs, true, rank > 0),
        Check::compare("middle multiplicity 3a2 + 3b2", &inputs, 3 * a2 + 3 * b2, mid),
    ];
    let v = t.input.twist(1, 1);
    for (s, u) in BALANCE_TWISTS {
        let got = layers[2].chi(s, u) - layers[1].chi(s, u) + layers[0].chi(s, u);
        checks.push(Check::compare("chi balance", &format!("{inputs}; twist ({s},{u})"), chi(&v.twist(s, u))?, got));
    }
    Ok(MonadOutcome::Resolution(Monad { layers, rank, checks }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::parse;
    use crate::flag::flag_invariants;
    use crate::report::all_pass;
    use crate::ulrich::{extension_example, resolution_shape, Example, UlrichProfile};

    fn failures(v: &[Check]) -> usize {
        v.iter().filter(|c| !c.passed()).count()
    }

    #[test]
    fn corrected_collections_are_exceptional_pairs() {
        for (name, pairs) in [("col13", 81), ("col13t", 81), ("col15-fixed", 81), ("col15t", 81), ("flag-fixed", 36)] {
            let c = builtin(name).unwrap();
            let o = c.orthogonality().unwrap();
            assert_eq!(o.len(), pairs);
            assert!(all_pass(&o), "{name}");
            assert!(all_pass(&c.exceptionality().unwrap()), "{name}");
            assert!(all_pass(&c.dual_characterization().unwrap()), "{name}");
            assert!(verified(name).is_ok());
        }
    }

    #[test]
    fn printed_collections_fail() {
        let c = builtin("col15").unwrap();
        assert_eq!(failures(&c.orthogonality().unwrap()), 10);
        // the repeated O(-1,-1) is not exceptional against itself
        assert_eq!(failures(&c.exceptionality().unwrap()), 1);
        let c = builtin("flag").unwrap();
        assert_eq!(failures(&c.orthogonality().unwrap()), 8);
        assert!(matches!(verified("col15"), Err(Error::CheckFailed(_))));
        assert!(matches!(builtin("col99"), Err(Error::UnknownIdentifier(_))));
    }

    #[test]
    fn single_pairings_by_hand() {
        let c = builtin("col13").unwrap();
        assert_eq!(cohomology_on(Variety::X, &c.objects[0].0.tensor(&c.duals[0]).unwrap()).unwrap(), [1, 0, 0, 0, 0]);
        // O(-1,-1) ⊗ Ω(1)⊠Ω(1) = Ω⊠Ω, h1 ⊗ h1 in degree 2 = 3 + k3
        let c = builtin("col15-fixed").unwrap();
        assert_eq!(c.objects[3].1, -1);
        assert_eq!(cohomology_on(Variety::X, &c.objects[3].0.tensor(&c.duals[3]).unwrap()).unwrap(), [0, 0, 1, 0, 0]);
    }

    fn profile_cells(v: &BundleExpr) {
        let p = UlrichProfile::of(v).unwrap();
        let t = e1_table(&v.twist(-1, -1), &builtin("col13t").unwrap()).unwrap();
        let cells = [
            ((-2, 2), p.a[0]),
            ((-1, 1), p.b[0]),
            ((-3, 2), 3 * p.a[2] + 3 * p.b[2]),
            ((-4, 3), p.a[1]),
            ((-5, 4), p.b[1]),
            ((-6, 4), p.b[2]),
            ((-7, 5), p.a[2]),
        ];
        for ((pp, q), want) in cells {
            assert_eq!(t.dim(pp, q), Some(want), "{v} at ({pp},{q})");
        }
        assert!(all_pass(&chern_convergence(&t).unwrap()), "{v}");
    }

    #[test]
    fn table_positions_carry_the_profile() {
        profile_cells(&parse("Om(3)#Om(2)").unwrap());
        profile_cells(&parse("Om(2)#Om(3)").unwrap());
        for which in [Example::Aes, Example::Aes2] {
            profile_cells(&extension_example(which).unwrap().bundle);
        }
    }

    #[test]
    fn monad_agrees_with_resolution_shape() {
        for s in ["Om(3)#Om(2)", "Om(2)#Om(3)"] {
            let v = parse(s).unwrap();
            let t = e1_table(&v.twist(-1, -1), &builtin("col13t").unwrap()).unwrap();
            let MonadOutcome::Resolution(m) = monad_extract(&t).unwrap() else { panic!("{s} degenerate") };
            let shape = resolution_shape(&UlrichProfile::of(&v).unwrap(), Some(&v)).unwrap();
            assert_eq!(m.layers, shape.left, "{s}");
            assert_eq!(m.rank, 4);
            assert!(all_pass(&m.checks), "{s}");
        }
    }

    #[test]
    fn monad_of_extension_and_trivial() {
        let v = extension_example(Example::Aes).unwrap().bundle;
        let t = e1_table(&v.twist(-1, -1), &builtin("col13t").unwrap()).unwrap();
        let MonadOutcome::Resolution(m) = monad_extract(&t).unwrap() else { panic!() };
        assert_eq!(m.layers[2], Layer(vec![((1, 0), 3), ((0, 1), 9)]));
        assert_eq!(m.rank, 5);
        let t = e1_table(&BundleExpr::line(0, 0), &builtin("col13t").unwrap()).unwrap();
        assert!(matches!(monad_extract(&t).unwrap(), MonadOutcome::NotDegenerate(_)));
        let t = e1_table(&BundleExpr::line(0, 0), &builtin("col13").unwrap()).unwrap();
        assert!(monad_extract(&t).is_err());
    }

    #[test]
    fn tables_are_additive() {
        let c = builtin("col15t").unwrap();
        let (a, b) = (BundleExpr::line(1, -1), parse("Om(1)#O(0)").unwrap());
        let (ta, tb, tab) = (e1_table(&a, &c).unwrap(), e1_table(&b, &c).unwrap(), e1_table(&(a + b), &c).unwrap());
        for ((x, y), z) in ta.cells.iter().zip(&tb.cells).zip(&tab.cells) {
            assert_eq!(z.dim, Some(x.dim.unwrap() + y.dim.unwrap()));
        }
        for t in [ta, tb, tab] {
            assert!(all_pass(&chern_convergence(&t).unwrap()));
        }
    }

    #[test]
    fn line_bundle_table_on_col15t() {
        // V = O(2,0)
        let t = e1_table(&BundleExpr::line(1, -1), &builtin("col15t").unwrap()).unwrap();
        let nz: Vec<(i64, i64, u64)> = t.nonzero().iter().map(|c| (c.p, c.q, c.dim.unwrap())).collect();
        assert_eq!(nz, vec![(-2, 2, 3), (-3, 2, 3), (-5, 3, 1)]);
    }

    #[test]
    fn flag_table_holds_the_invariants() {
        let c = builtin("flag-fixed").unwrap();
        let vs = [
            FlagBundle::line(2, 0),
            FlagBundle::line(0, 2),
            FlagBundle::res(crate::ulrich::family(crate::ulrich::FamilyKind::E1, 2).unwrap()),
        ];
        for v in vs {
            let inv = flag_invariants(&v).unwrap();
            let t = e1_table(&v.lift().twist(-1, -1), &c).unwrap();
            assert_eq!(t.dim(-1, 1), Some(inv.a), "{v}");
            assert_eq!(t.dim(-2, 2), Some(inv.b), "{v}");
            assert_eq!(t.dim(-3, 2), Some(inv.d), "{v}");
            assert_eq!(t.dim(-4, 3), Some(inv.c), "{v}");
            assert!(all_pass(&chern_convergence(&t).unwrap()), "{v}");
        }
    }
}
