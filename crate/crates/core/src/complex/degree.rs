use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg};

use crate::cube::{intersection_number, CurveClass};
use crate::diagram::Winding;

/// An element of ℤ𝒞: a finite integer combination of essential classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkeinDegree(BTreeMap<CurveClass, i64>);

impl SkeinDegree {
    pub fn zero() -> Self {
        SkeinDegree(BTreeMap::new())
    }

    /// `k·[class]`; zero when `k == 0` or the class is trivial.
    pub fn multiple(class: CurveClass, k: i64) -> Self {
        let mut d = SkeinDegree::zero();
        d.add_term(class, k);
        d
    }

    pub fn add_term(&mut self, class: CurveClass, k: i64) {
        if k == 0 || class.is_trivial() {
            return;
        }
        let entry = self.0.entry(class).or_insert(0);
        *entry += k;
        if *entry == 0 {
            self.0.remove(&class);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (CurveClass, i64)> + '_ {
        self.0.iter().map(|(c, k)| (*c, *k))
    }

    pub fn coefficient(&self, class: CurveClass) -> i64 {
        self.0.get(&class).copied().unwrap_or(0)
    }

    /// Image under `[γ] ↦ γ·c`, each class oriented by its normalized
    /// representative.
    pub fn pair_with(&self, c: Winding) -> i64 {
        self.terms()
            .map(|(g, k)| k * intersection_number(g.winding(), c))
            .sum()
    }
}

impl Add for &SkeinDegree {
    type Output = SkeinDegree;
    fn add(self, rhs: &SkeinDegree) -> SkeinDegree {
        let mut out = self.clone();
        for (c, k) in rhs.terms() {
            out.add_term(c, k);
        }
        out
    }
}

impl Neg for &SkeinDegree {
    type Output = SkeinDegree;
    fn neg(self) -> SkeinDegree {
        SkeinDegree(self.0.iter().map(|(c, k)| (*c, -k)).collect())
    }
}

/// Renders `k[p,q] + k'[p',q']` with classes in normalized form and terms in
/// lexicographic order; the zero degree renders as `0`.
impl fmt::Display for SkeinDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, k)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{k}[{},{}]", c.p(), c.q())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::normalize_class;

    #[test]
    fn rendering() {
        let a = normalize_class(1, 0).unwrap();
        let b = normalize_class(0, 1).unwrap();
        assert_eq!(SkeinDegree::zero().to_string(), "0");
        assert_eq!(SkeinDegree::multiple(a, -1).to_string(), "-1[1,0]");
        let mut d = SkeinDegree::multiple(a, 2);
        d.add_term(b, 1);
        assert_eq!(d.to_string(), "1[0,1] + 2[1,0]");
    }

    #[test]
    fn zero_terms_vanish() {
        let a = normalize_class(1, 1).unwrap();
        let d = SkeinDegree::multiple(a, 3);
        assert!((&d + &-&d).is_zero());
        assert!(SkeinDegree::multiple(CurveClass::TRIVIAL, 4).is_zero());
    }

    #[test]
    fn pairing() {
        let a = normalize_class(1, 0).unwrap();
        assert_eq!(SkeinDegree::multiple(a, 1).pair_with(Winding::new(0, 1)), 1);
        assert_eq!(
            SkeinDegree::multiple(a, -1).pair_with(Winding::new(0, 1)),
            -1
        );
        assert_eq!(SkeinDegree::multiple(a, 1).pair_with(Winding::new(1, 0)), 0);
    }
}
