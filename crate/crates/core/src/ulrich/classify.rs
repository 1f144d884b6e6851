//! Which of the known shapes a profile is forced into.

use std::fmt;

use serde::Serialize;

use super::UlrichProfile;
use crate::bundles::{BundleExpr, FactorBundle};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Branch {
    /// `a2 = b2 = 0`: a sum of `a1` copies' worth of
    /// `0 → O(-1,1)^a1 → O(0,1)^2a1 → V → 0` and `b1` copies' worth of
    /// `0 → O(1,-1)^b1 → O(1,0)^2b1 → V → 0`.
    Pullback { a1: u64, b1: u64 },
    /// `a1 = b1 = a3 = b3 = 0`: a line bundle.
    LineBundle { bundle: String },
    /// `a0 = a4 = 0` or `b0 = b4 = 0`, with the candidate the profile matches.
    BoundaryVanishing { hypothesis: String, bundle: String },
    General,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Pullback { a1, b1 } => write!(f, "pullback families: {a1} x (O(-1,1) -> O(0,1)^2), {b1} x (O(1,-1) -> O(1,0)^2)"),
            Branch::LineBundle { bundle } => write!(f, "line bundle {bundle}"),
            Branch::BoundaryVanishing { hypothesis, bundle } => write!(f, "{hypothesis}: {bundle}"),
            Branch::General => write!(f, "general (not classified)"),
        }
    }
}

fn known(left: FactorBundle, right: FactorBundle) -> Result<(String, UlrichProfile)> {
    let e = BundleExpr::boxed(left, right);
    Ok((e.to_string(), UlrichProfile::of(&e)?))
}

fn identify(p: &UlrichProfile, candidates: &[(String, UlrichProfile)], hypothesis: &str) -> Result<String> {
    candidates
        .iter()
        .find(|(_, q)| q == p)
        .map(|(name, _)| name.clone())
        .ok_or_else(|| {
            let names: Vec<&str> = candidates.iter().map(|(n, _)| n.as_str()).collect();
            Error::CheckFailed(format!("contradiction: {hypothesis} forces one of {}, but {p} matches none", names.join(", ")))
        })
}

pub fn classify(p: &UlrichProfile) -> Result<Branch> {
    let (a, b) = (p.a, p.b);
    let (o, om) = (FactorBundle::o, FactorBundle::omega);
    if a[2] == 0 && b[2] == 0 {
        if b[0] != 2 * a[1] || a[0] != 2 * b[1] {
            return Err(Error::CheckFailed(format!(
                "contradiction: a2 = b2 = 0 forces b0 = 2a1 and a0 = 2b1, got {p}"
            )));
        }
        if a[1] == 1 || b[1] == 1 {
            return Err(Error::CheckFailed(format!(
                "contradiction: a single copy of a pullback sequence is not locally free, got {p}"
            )));
        }
        return Ok(Branch::Pullback { a1: a[1], b1: b[1] });
    }
    if a[1] == 0 && b[1] == 0 && a[3] == 0 && b[3] == 0 {
        let c = [known(o(2), o(0))?, known(o(0), o(2))?];
        return Ok(Branch::LineBundle { bundle: identify(p, &c, "a1 = b1 = a3 = b3 = 0")? });
    }
    if a[0] == 0 && a[4] == 0 {
        let hyp = "a0 = a4 = 0";
        let c = [known(om(2), om(3))?, known(o(0), o(2))?];
        return Ok(Branch::BoundaryVanishing { hypothesis: hyp.into(), bundle: identify(p, &c, hyp)? });
    }
    if b[0] == 0 && b[4] == 0 {
        let hyp = "b0 = b4 = 0";
        let c = [known(om(3), om(2))?, known(o(2), o(0))?];
        return Ok(Branch::BoundaryVanishing { hypothesis: hyp.into(), bundle: identify(p, &c, hyp)? });
    }
    Ok(Branch::General)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(s: &str) -> UlrichProfile {
        UlrichProfile::of(&crate::bundles::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn line_bundles() {
        assert_eq!(classify(&profile("O(2,0)")).unwrap(), Branch::LineBundle { bundle: "O(2)#O(0)".into() });
        assert_eq!(classify(&profile("O(0,2)")).unwrap(), Branch::LineBundle { bundle: "O(0)#O(2)".into() });
    }

    #[test]
    fn omega_boxes() {
        let b = classify(&profile("Om(3)#Om(2)")).unwrap();
        assert_eq!(b, Branch::BoundaryVanishing { hypothesis: "b0 = b4 = 0".into(), bundle: "Om(3)#Om(2)".into() });
        let b = classify(&profile("Om(2)#Om(3)")).unwrap();
        assert_eq!(b, Branch::BoundaryVanishing { hypothesis: "a0 = a4 = 0".into(), bundle: "Om(2)#Om(3)".into() });
    }

    #[test]
    fn pullback_relation() {
        // 0 → O(-1,1)^2 → O(0,1)^4 → V → 0 by hand: b0 = h0(O(0,0)^4) = 4, a0 = 0
        let p = UlrichProfile::new(2, [0, 2, 0, 0, 4], [4, 0, 0, 2, 0]).unwrap();
        assert_eq!(classify(&p).unwrap(), Branch::Pullback { a1: 2, b1: 0 });
        // a0 = 2a1 with b = 0 is rejected
        let p = UlrichProfile::new(2, [4, 2, 0, 2, 4], [0; 5]).unwrap();
        assert!(matches!(classify(&p), Err(Error::CheckFailed(_))));
    }

    #[test]
    fn candidates_must_match() {
        // a1 = b1 = a3 = b3 = 0 but not a line bundle profile
        let p = UlrichProfile::new(2, [6, 0, 0, 0, 6], [0, 0, 2, 0, 0]).unwrap();
        assert!(classify(&p).is_err());
    }
}
