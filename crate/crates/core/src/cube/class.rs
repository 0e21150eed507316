use std::fmt;

use num_integer::gcd;

use crate::diagram::Winding;
use crate::error::{Error, Result};

/// Isotopy class of a simple closed curve on T², unoriented.
///
/// Either the trivial class (0, 0) or a primitive pair normalized so that the
/// first nonzero coordinate is positive. The normalized representative also
/// serves as the fixed orientation of the class when pairing with an oriented
/// curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    p: i64,
    q: i64,
}

impl CurveClass {
    pub const TRIVIAL: CurveClass = CurveClass { p: 0, q: 0 };

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn is_trivial(self) -> bool {
        self.p == 0 && self.q == 0
    }

    pub fn is_essential(self) -> bool {
        !self.is_trivial()
    }

    /// Normalized class of an embedded curve with homology `w`; `None` when
    /// `w` is nonzero and not primitive.
    pub fn primitive(w: Winding) -> Option<CurveClass> {
        if w.is_zero() {
            return Some(CurveClass::TRIVIAL);
        }
        if gcd(w.a, w.b) != 1 {
            return None;
        }
        Some(flip(w.a, w.b))
    }

    /// Normalized direction of `(p, q)`, dividing out the gcd.
    pub fn reduced(p: i64, q: i64) -> CurveClass {
        if p == 0 && q == 0 {
            return CurveClass::TRIVIAL;
        }
        let g = gcd(p, q);
        flip(p / g, q / g)
    }

    /// The oriented representative.
    pub fn winding(self) -> Winding {
        Winding::new(self.p, self.q)
    }
}

fn flip(p: i64, q: i64) -> CurveClass {
    if p < 0 || (p == 0 && q < 0) {
        CurveClass { p: -p, q: -q }
    } else {
        CurveClass { p, q }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Normalizes the class of a traced circle. A nonzero non-primitive sum
/// cannot come from an embedded circle and is rejected.
pub fn normalize_class(p: i64, q: i64) -> Result<CurveClass> {
    CurveClass::primitive(Winding::new(p, q)).ok_or(Error::NonPrimitiveClass { p, q })
}

/// Algebraic intersection number of two oriented classes.
pub fn intersection_number(a: Winding, b: Winding) -> i64 {
    a.a * b.b - a.b * b.a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(normalize_class(-1, 2).unwrap(), CurveClass { p: 1, q: -2 });
        assert_eq!(normalize_class(0, 0).unwrap(), CurveClass::TRIVIAL);
        assert_eq!(normalize_class(0, -1).unwrap(), CurveClass { p: 0, q: 1 });
        assert_eq!(
            normalize_class(2, 0),
            Err(Error::NonPrimitiveClass { p: 2, q: 0 })
        );
        assert_eq!(CurveClass::reduced(-4, 6), CurveClass { p: 2, q: -3 });
    }

    #[test]
    fn intersections() {
        let w = Winding::new;
        assert_eq!(intersection_number(w(1, 0), w(0, 1)), 1);
        assert_eq!(intersection_number(w(1, 0), w(1, 0)), 0);
        assert_eq!(intersection_number(w(2, 1), w(1, 1)), 1);
        assert_eq!(intersection_number(w(0, 1), w(1, 0)), -1);
    }
}
