use std::fmt;

/// Dense exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars].into_boxed_slice(), degree: 0 }
    }

    pub fn var(nvars: usize, var: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = exp;
        Monomial { exps: exps.into_boxed_slice(), degree: exp }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().try_fold(0u32, |a, &e| a.checked_add(e)).expect("exponent overflow");
        Monomial { exps: exps.into_boxed_slice(), degree }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Support bitmask (variable `i` sets bit `i mod 64`).
    pub fn mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    /// Support as variable indices.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u32]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        let degree = self.degree.checked_add(other.degree).expect("exponent overflow");
        Monomial { exps, degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u32]> = other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u32]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps: Box<[u32]> = self.exps.iter().map(|e| e.checked_mul(k).expect("exponent overflow")).collect();
        Monomial { exps, degree: self.degree.checked_mul(k).expect("exponent overflow") }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_division_and_degree() {
        let a = Monomial::from_exponents(vec![2, 0, 1]);
        let b = Monomial::from_exponents(vec![1, 3, 0]);
        let l = a.lcm(&b);
        assert_eq!(l.exponents(), &[2, 3, 1]);
        assert_eq!(l.degree(), 6);
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient_of(&l).exponents(), &[0, 3, 0]);
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(3, 1, 2).is_coprime(&Monomial::var(3, 0, 5)));
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_is_fatal() {
        let a = Monomial::from_exponents(vec![u32::MAX]);
        let _ = a.mul(&Monomial::from_exponents(vec![1]));
    }
}
