//! Bundle expressions on P2 × P2 and their normal form.

mod construction;
mod expr;
mod factor;
mod parse;

pub use construction::{Construction, Fact, FactorMap, KnownMap, Side, Slot};
pub use expr::{BoxTerm, BundleExpr};
pub use factor::{FactorBundle, MAX_SYM};
pub use parse::parse;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_examples() {
        assert_eq!(BundleExpr::line(2, 0).twist(-1, 0), BundleExpr::line(1, 0));
        let e = parse("Om(3)#Om(2)").unwrap().twist(-3, -2);
        assert_eq!(e, parse("Om(0)#Om(0)").unwrap());
        assert_eq!(BundleExpr::g1().twist(0, -1), parse("O(0)#Om(0)").unwrap());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(BundleExpr::line(2, 0).dual(), BundleExpr::line(-2, 0));
        assert_eq!(parse("Om(1)#O(0)").unwrap().dual(), parse("Om(2)#O(0)").unwrap());
    }

    #[test]
    fn tensor_examples() {
        let om = parse("Om(0)#O(0)").unwrap();
        assert_eq!(om.tensor(&om).unwrap(), parse("S2Om(0)#O(0) + O(-3,0)").unwrap());
        assert_eq!(BundleExpr::line(1, 0).tensor(&BundleExpr::line(0, 1)).unwrap(), BundleExpr::line(1, 1));
        assert_eq!(
            BundleExpr::g1().tensor(&BundleExpr::g2()).unwrap(),
            parse("Om(1)#Om(1)").unwrap()
        );
        let s2 = parse("S2Om(0)#O(0)").unwrap();
        assert!(matches!(s2.tensor(&om), Err(crate::Error::OutsideFactorSet(_))));
    }

    #[test]
    fn ranks() {
        assert_eq!(parse("Om(3)#Om(2)").unwrap().rank().unwrap(), 4);
        let ab = Construction::extension(parse("O(1)#Om(0)").unwrap(), parse("O(0)#Om(2)").unwrap(), true);
        assert_eq!(ab.rank().unwrap(), 4);
        let neg = Construction::cokernel(BundleExpr::line(0, 0).scaled(3), BundleExpr::line(1, 0));
        assert!(matches!(neg.rank(), Err(crate::Error::NegativeRank(-2))));
    }

    #[test]
    fn construction_twists_and_duals() {
        let c = Construction::extension_decl(parse("Om(2)#Om(3)").unwrap(), BundleExpr::line(2, 0))
            .with_fact(BundleExpr::line(-2, 0), 0, 0);
        let t = c.twist(-2, 0);
        assert_eq!(t.base_part(Slot::Quot), Some(&BundleExpr::line(0, 0)));
        assert_eq!(t.active_facts(), vec![(0, 0)]);
        assert!(t.connecting_map_nonzero());
        assert_eq!(c.dual().dual(), c);
        let d = t.dual();
        assert_eq!(d.unknown(), Slot::Mid);
        assert_eq!(d.active_facts(), vec![]);
        assert_eq!(d.twist(-3, -3).active_facts(), vec![(4, 0)]);
    }
}
