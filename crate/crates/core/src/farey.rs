//! Reduced fractions of the open unit interval in Farey order: denominators
//! 2, 3, 4, ... and, within each denominator, ascending numerators coprime
//! to it.

use std::collections::HashSet;

use num_integer::Integer;

use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct FareyParameters {
    p: u64,
    q: u64,
}

impl FareyParameters {
    pub fn new() -> Self {
        FareyParameters { p: 0, q: 2 }
    }
}

impl Default for FareyParameters {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for FareyParameters {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        loop {
            self.p += 1;
            if self.p >= self.q {
                self.q += 1;
                self.p = 1;
            }
            if self.p.gcd(&self.q) == 1 {
                return Some(Rational::new(self.p, self.q));
            }
        }
    }
}

/// First fraction in Farey order not in `excluded`.
pub fn choose_parameter(excluded: &HashSet<Rational>) -> Rational {
    FareyParameters::new()
        .find(|t| !excluded.contains(t))
        .expect("the enumeration is infinite")
}
