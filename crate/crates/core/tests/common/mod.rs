#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use segre::report::{Check, Status};
use segre::ulrich::{extension_example, family, Example, FamilyKind};
use segre::{parse, BoxTerm, BundleExpr, FactorBundle};

/// Ulrich bundles on X that the engine certifies, with a short name.
pub fn verified_ulrich() -> Vec<(String, BundleExpr)> {
    let mut out: Vec<(String, BundleExpr)> = ["O(2,0)", "O(0,2)", "Om(3)#Om(2)", "Om(2)#Om(3)"]
        .iter()
        .map(|s| (s.to_string(), parse(s).unwrap()))
        .collect();
    for k in [FamilyKind::E1, FamilyKind::E2, FamilyKind::E5, FamilyKind::E6] {
        for r in 2..=4 {
            out.push((format!("{k} r={r}"), family(k, r).unwrap()));
        }
    }
    for w in [Example::Aes, Example::Aes2, Example::Ab] {
        out.push((w.to_string(), extension_example(w).unwrap().bundle));
    }
    out
}

pub fn factor(kind: u8, t: i64) -> FactorBundle {
    match kind % 3 {
        0 => FactorBundle::o(t),
        1 => FactorBundle::omega(t),
        _ => FactorBundle::s2omega(t),
    }
}

/// Sums of one to three box terms over {O, Ω, S²Ω} with twists in [-6, 3].
pub fn random_corpus(n: usize, seed: u64) -> Vec<BundleExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let terms = rng.gen_range(1..=3);
            BundleExpr::from_terms((0..terms).map(|_| BoxTerm {
                left: factor(rng.gen(), rng.gen_range(-6..=3)),
                right: factor(rng.gen(), rng.gen_range(-6..=3)),
                multiplicity: rng.gen_range(1..=3),
            }))
        })
        .collect()
}

/// One line per criterion: status, passed count, and the first failures.
pub fn criterion_line(n: u32, title: &str, checks: &[Check]) -> (bool, String) {
    let passed = checks.iter().filter(|c| c.passed()).count();
    let ok = passed == checks.len() && !checks.is_empty();
    let mut line = format!("[{}] criterion {n}, {title}: {passed}/{} checks", if ok { "PASS" } else { "FAIL" }, checks.len());
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .take(3)
        .map(|c| {
            let tag = if c.status == Status::Indeterminate { "indeterminate" } else { "failed" };
            format!("{tag}: {} ({}) expected {}, got {}", c.check, c.inputs, c.expected, c.got)
        })
        .collect();
    if !bad.is_empty() {
        line.push_str("; ");
        line.push_str(&bad.join("; "));
    }
    (ok, line)
}
