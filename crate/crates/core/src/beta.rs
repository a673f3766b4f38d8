//! Beta sets and L-symbols.

use alloc::vec::Vec;
use core::fmt;

use crate::partition::{Multipartition, Partition};
use crate::Error;

/// The `L` beta numbers `β_i = λ_i + L − i` of a partition, strictly
/// decreasing. `L` is the number of entries and is part of the value: the
/// same partition at different `L` gives different beta sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    pub fn new(partition: &Partition, length: usize) -> Result<Self, Error> {
        if length < partition.len() {
            return Err(Error::LengthTooSmall {
                requested: length,
                required: partition.len(),
            });
        }
        let entries = (1..=length)
            .map(|i| partition.part(i) + length - i)
            .collect();
        Ok(BetaSet { entries })
    }

    /// Wraps a strictly decreasing sequence of non-negative integers.
    pub fn from_entries(entries: Vec<usize>) -> Result<Self, Error> {
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Precondition(
                "beta numbers must be strictly decreasing",
            ));
        }
        Ok(BetaSet { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn length(&self) -> usize {
        self.entries.len()
    }

    /// Recovers `λ_i = β_i − L + i`.
    pub fn partition(&self) -> Partition {
        let len = self.length();
        let parts = self
            .entries
            .iter()
            .enumerate()
            .map(|(k, &b)| b + k + 1 - len)
            .collect();
        Partition::new(parts).expect("strictly decreasing beta numbers give a partition")
    }

    /// `{b + 1 : b ∈ B} ∪ {0}`, the beta set of the same partition at `L + 1`.
    pub fn shift(&self) -> BetaSet {
        let mut entries: Vec<usize> = self.entries.iter().map(|b| b + 1).collect();
        entries.push(0);
        BetaSet { entries }
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, b) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("]")
    }
}

/// The `m × L` matrix of beta numbers of a multipartition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LSymbol {
    rows: Vec<BetaSet>,
    length: usize,
}

impl LSymbol {
    pub fn new(multipartition: &Multipartition, length: usize) -> Result<Self, Error> {
        let rows = multipartition
            .components()
            .iter()
            .map(|p| BetaSet::new(p, length))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LSymbol { rows, length })
    }

    /// Row `s`, 1-based.
    pub fn row(&self, s: usize) -> &BetaSet {
        &self.rows[s - 1]
    }

    pub fn rows(&self) -> &[BetaSet] {
        &self.rows
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn multipartition(&self) -> Multipartition {
        Multipartition::new(self.rows.iter().map(BetaSet::partition).collect())
            .expect("symbol has at least one row")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn b(entries: &[usize]) -> BetaSet {
        BetaSet::from_entries(entries.to_vec()).unwrap()
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(BetaSet::new(&Partition::empty(), 3).unwrap(), b(&[2, 1, 0]));
        assert_eq!(BetaSet::new(&p(&[3, 1]), 2).unwrap(), b(&[4, 1]));
        assert_eq!(BetaSet::new(&p(&[2, 1]), 2).unwrap(), b(&[3, 1]));
        assert_eq!(
            BetaSet::new(&p(&[2, 1]), 1),
            Err(Error::LengthTooSmall {
                requested: 1,
                required: 2
            })
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(b(&[4, 1]).shift(), b(&[5, 2, 0]));
        assert_eq!(b(&[0]).shift(), b(&[1, 0]));
        assert_eq!(b(&[2, 1, 0]).shift().shift(), b(&[4, 3, 2, 1, 0]));
    }

    #[test]
    fn different_lengths_are_different_values() {
        let lam = p(&[2, 1]);
        let short = BetaSet::new(&lam, 2).unwrap();
        let long = BetaSet::new(&lam, 3).unwrap();
        assert_ne!(short, long);
        assert_eq!(short.partition(), long.partition());
        assert_eq!(short.shift(), long);
    }

    #[test]
    fn beta_round_trip_and_shift() {
        for n in 0..=10 {
            for lam in partitions(n) {
                for len in lam.len()..=lam.len() + 3 {
                    let beta = BetaSet::new(&lam, len).unwrap();
                    assert_eq!(beta.length(), len);
                    assert!(beta.entries().windows(2).all(|w| w[0] > w[1]));
                    assert_eq!(beta.partition(), lam);
                    assert_eq!(beta.shift().partition(), lam);
                    assert_eq!(beta.shift(), BetaSet::new(&lam, len + 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn l_symbol_examples() {
        let mp = |c: &[&[usize]]| Multipartition::new(c.iter().map(|x| p(x)).collect()).unwrap();
        let sym = LSymbol::new(&mp(&[&[], &[]]), 1).unwrap();
        assert_eq!(sym.rows(), &[b(&[0]), b(&[0])]);
        let sym = LSymbol::new(&mp(&[&[1], &[1]]), 1).unwrap();
        assert_eq!(sym.rows(), &[b(&[1]), b(&[1])]);
        let sym = LSymbol::new(&mp(&[&[2], &[1, 1]]), 2).unwrap();
        assert_eq!(sym.rows(), vec![b(&[3, 0]), b(&[2, 1])].as_slice());
        assert_eq!(sym.multipartition(), mp(&[&[2], &[1, 1]]));
        assert!(LSymbol::new(&mp(&[&[2], &[1, 1]]), 1).is_err());
    }
}
