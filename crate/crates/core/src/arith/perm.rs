use alloc::vec::Vec;

use crate::Error;

/// A permutation `σ` of `{1..m}`, stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[s-1] = σ(s)`.
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        let m = images.len();
        let mut seen = alloc::vec![false; m];
        for &i in &images {
            if i == 0 || i > m || seen[i - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m).collect(),
        }
    }

    /// The transposition `(a b)` in `S_m`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Result<Self, Error> {
        if a == 0 || b == 0 || a > m || b > m {
            return Err(Error::InvalidPermutation);
        }
        let mut images: Vec<usize> = (1..=m).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, s: usize) -> usize {
        self.images[s - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, Error> {
        if self.degree() != other.degree() {
            return Err(Error::InvalidPermutation);
        }
        Ok(Permutation {
            images: other.images.iter().map(|&s| self.image(s)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.degree()];
        for (s, &t) in self.images.iter().enumerate() {
            images[t - 1] = s + 1;
        }
        Permutation { images }
    }

    /// Every element of `S_m` in lexicographic order of image lists.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=m).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..m).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..m).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Permutation::new(alloc::vec![2, 1, 3]).is_ok());
        assert_eq!(
            Permutation::new(alloc::vec![2, 2]),
            Err(Error::InvalidPermutation)
        );
        assert_eq!(
            Permutation::new(alloc::vec![0, 1]),
            Err(Error::InvalidPermutation)
        );
    }

    #[test]
    fn group_structure() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(1).len(), 1);
        for a in Permutation::all(3) {
            assert_eq!(a.compose(&a.inverse()).unwrap(), Permutation::identity(3));
            for b in Permutation::all(3) {
                let ab = a.compose(&b).unwrap();
                for s in 1..=3 {
                    assert_eq!(ab.image(s), a.image(b.image(s)));
                }
            }
        }
    }
}
