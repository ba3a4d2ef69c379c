use std::fmt::Debug;

use super::cyclo::CycloNum;
use super::rational::Rational;

/// The coefficient fields used by the generic linear algebra: Q and Q(ζ_n).
pub trait Field: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;
    fn to_cyclo(&self) -> CycloNum;

    fn from_i64(k: i64) -> Self {
        Self::from_rational(&Rational::from(k))
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn to_cyclo(&self) -> CycloNum {
        CycloNum::from_rational(self)
    }
}

impl Field for CycloNum {
    fn zero() -> Self {
        CycloNum::zero()
    }
    fn one() -> Self {
        CycloNum::one()
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn from_rational(q: &Rational) -> Self {
        CycloNum::from_rational(q)
    }
    fn to_cyclo(&self) -> CycloNum {
        self.clone()
    }
}
