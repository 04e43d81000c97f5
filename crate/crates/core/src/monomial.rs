use core::cmp::Ordering;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 8]>;

/// Exponent vector with one slot per ring variable and a cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: core::iter::repeat_n(0, nvars).collect(),
            degree: 0,
        }
    }

    pub fn new<I: IntoIterator<Item = u16>>(exps: I) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn with_exponent(&self, var: usize, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        exps[var] = e;
        Monomial::new(exps)
    }

    /// Variables with a positive exponent, as a bit mask (first 64 variables).
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(i, e)| **e > 0 && *i < 64)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }
}

/// Monomial orders used by the Gröbner kernel.
///
/// `Block(k)` compares the first `k` variables by grevlex first and breaks
/// ties with grevlex on the remaining variables; it eliminates the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block(usize),
}

fn grevlex_range(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => {
                match a.degree.cmp(&b.degree) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block(k) => {
                let k = k.min(a.exps.len());
                match grevlex_range(&a.exps[..k], &b.exps[..k]) {
                    Ordering::Equal => grevlex_range(&a.exps[k..], &b.exps[k..]),
                    o => o,
                }
            }
        }
    }

    /// Whether the order is graded by total degree (used by pair selection).
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::Grevlex;
        let xy = Monomial::new([1, 1, 0]);
        let xz = Monomial::new([1, 0, 1]);
        let y2 = Monomial::new([0, 2, 0]);
        assert_eq!(o.compare(&xy, &xz), Ordering::Greater);
        assert_eq!(o.compare(&y2, &xz), Ordering::Greater);
        assert_eq!(o.compare(&Monomial::new([0, 0, 3]), &xy), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::Block(1);
        let t = Monomial::new([1, 0, 0]);
        let big = Monomial::new([0, 5, 5]);
        assert_eq!(o.compare(&t, &big), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new([1, 2, 0]);
        let b = Monomial::new([2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial::new([1, 0, 1]));
        assert_eq!(a.lcm(&Monomial::new([0, 3, 1])), Monomial::new([1, 3, 1]));
        assert!(Monomial::new([1, 0, 0]).is_coprime(&Monomial::new([0, 4, 2])));
    }
}
