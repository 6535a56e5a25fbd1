//! Exact binomial/factorial helpers shared by the counting and bound
//! evaluation modules.

use crate::BigCount;
use num::{BigUint, One, Zero};

/// n! as a big integer.
pub fn factorial(n: u64) -> BigCount {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Falling factorial n · (n-1) ··· (n-k+1); empty product for k = 0.
pub fn falling_factorial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
    }
    acc
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// C(n, k) in floating point, for formula evaluation at large n.
pub fn binomial_f64(n: f64, k: u64) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (n - i as f64) / (i + 1) as f64;
    }
    acc
}

/// Lexicographic k-subsets of {0, …, n-1}.
///
/// Yields each subset as a sorted index vector; yields the empty set
/// once when k = 0 and nothing when k > n.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        k,
        current: (0..k).collect(),
        done: k > n,
    }
}

pub struct Combinations {
    n: usize,
    k: usize,
    current: Vec<usize>,
    done: bool,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        // Advance to the next k-subset in lexicographic order.
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.n - (self.k - i) {
                self.current[i] += 1;
                for j in i + 1..self.k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
