//! Permutations of `{0, …, n-1}`.
//!
//! Composition acts left-first: `p.then(&q)` maps `x` to `q(p(x))`, the same
//! order in which moves of a walk are applied.

use std::fmt;
use std::ops::Mul;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, rejecting non-bijections.
    pub fn from_images<I>(images: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: TryInto<u32>,
    {
        let images: Vec<u32> = images
            .into_iter()
            .map(|x| {
                x.try_into()
                    .map_err(|_| Error::InvalidPermutation("image out of range".into()))
            })
            .collect::<Result<_>>()?;
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut result = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x >= degree || y >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                images[x] = y as u32;
            }
            let c = Permutation::from_images(images)?;
            result = result.then(&c);
        }
        Ok(result)
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        images.swap(a, b);
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Infallible form of [`compose`](Self::compose); panics on a degree mismatch.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ · self · g`, which maps `x^g` to `(x^self)^g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.images[x] as usize == x
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| !self.fixes(i)).collect()
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&i| !self.fixes(i))
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of all cycles, including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image(x);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    /// Disjoint-cycle notation, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            s.push_str(&parts.join(" "));
            s.push(')');
        }
        s
    }

    pub fn parity(&self) -> Parity {
        let n = self.degree();
        let cycles = self.cycle_type().len();
        if (n - cycles) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| acc / gcd(acc, l as u64) * l as u64)
    }

    /// Action restricted to `domain`, relabelled by position in `domain`.
    /// Fails unless `domain` is invariant.
    pub fn restrict(&self, domain: &[usize]) -> Result<Permutation> {
        let mut index = vec![u32::MAX; self.degree()];
        for (i, &x) in domain.iter().enumerate() {
            index[x] = i as u32;
        }
        let images = domain
            .iter()
            .map(|&x| {
                let y = index[self.image(x)];
                if y == u32::MAX {
                    Err(Error::NonInvariant)
                } else {
                    Ok(y)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    /// Extends the permutation to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

#[derive(Serialize, Deserialize)]
struct PermutationWire {
    degree: usize,
    images: Vec<u32>,
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PermutationWire {
            degree: self.degree(),
            images: self.images.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = PermutationWire::deserialize(deserializer)?;
        if wire.images.len() != wire.degree {
            return Err(D::Error::custom("images length differs from degree"));
        }
        Permutation::from_images(wire.images).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_acts_left_first() {
        let a = Permutation::transposition(3, 0, 1);
        let b = Permutation::transposition(3, 1, 2);
        let c = a.compose(&b).unwrap();
        assert_eq!(c.image(0), 2);
        assert_eq!(c.image(2), 1);
        assert_eq!(c.image(1), 0);
        // the 3-cycle 0 -> 2 -> 1 -> 0 as images; as moves 0 goes to 1 then 1 to 2
        assert_eq!(c.cycle_string(), "(0 2 1)");
    }

    #[test]
    fn identity_is_neutral() {
        let p = Permutation::from_images([2u32, 0, 3, 1]).unwrap();
        let e = Permutation::identity(4);
        assert_eq!(e.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&e).unwrap(), p);
        assert!(p.then(&p.inverse()).is_identity());
    }

    #[test]
    fn rejects_degree_mismatch_and_non_bijections() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch { .. })));
        assert!(Permutation::from_images([0u32, 0, 1]).is_err());
        assert!(Permutation::from_images([0u32, 3]).is_err());
    }

    #[test]
    fn parity_and_order() {
        assert_eq!(Permutation::identity(5).parity(), Parity::Even);
        assert_eq!(Permutation::transposition(5, 1, 3).parity(), Parity::Odd);
        let p = Permutation::from_cycles(6, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.parity(), Parity::Odd);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
    }

    #[test]
    fn cycle_string_and_json() {
        let p = Permutation::from_cycles(5, &[&[3, 1], &[0, 4]]).unwrap();
        assert_eq!(p.cycle_string(), "(0 4)(1 3)");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"degree":5,"images":[4,3,2,1,0]}"#);
        let back: Permutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>(r#"{"degree":3,"images":[0,0,1]}"#).is_err());
    }

    #[test]
    fn restrict_to_invariant_subset() {
        let p = Permutation::from_cycles(5, &[&[1, 3], &[2, 4]]).unwrap();
        let r = p.restrict(&[1, 2, 3, 4]).unwrap();
        assert_eq!(r.cycle_string(), "(0 2)(1 3)");
        assert!(p.restrict(&[1, 2]).is_err());
    }
}
