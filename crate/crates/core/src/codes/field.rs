use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// GF(2) or GF(3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    F2,
    F3,
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.q())
    }
}

impl Field {
    pub fn from_q(q: u32) -> Result<Self> {
        match q {
            2 => Ok(Field::F2),
            3 => Ok(Field::F3),
            _ => Err(Error::InvalidArgument(format!("unsupported field size {q}"))),
        }
    }

    pub fn q(&self) -> u8 {
        match self {
            Field::F2 => 2,
            Field::F3 => 3,
        }
    }

    pub fn add(&self, x: u8, y: u8) -> u8 {
        (x + y) % self.q()
    }

    pub fn mul(&self, x: u8, y: u8) -> u8 {
        (x * y) % self.q()
    }

    pub fn neg(&self, x: u8) -> u8 {
        (self.q() - x) % self.q()
    }

    /// Inverse of a non-zero element; both fields are their own inverse tables.
    pub fn inv(&self, x: u8) -> u8 {
        debug_assert!(x != 0);
        x
    }

    /// Non-zero elements.
    pub fn units(&self) -> &'static [u8] {
        match self {
            Field::F2 => &[1],
            Field::F3 => &[1, 2],
        }
    }
}

/// A vector of length at most 64, bit-sliced: bit `i` of `p` marks entry 1,
/// bit `i` of `m` marks entry 2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub p: u64,
    pub m: u64,
}

pub const MAX_LENGTH: usize = 64;

impl Word {
    pub const ZERO: Word = Word { p: 0, m: 0 };

    pub fn from_entries(entries: &[u8]) -> Word {
        let mut w = Word::ZERO;
        for (i, &x) in entries.iter().enumerate() {
            w.set(i, x);
        }
        w
    }

    pub fn entries(&self, n: usize) -> Vec<u8> {
        (0..n).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        ((self.p >> i) & 1) as u8 | ((((self.m >> i) & 1) as u8) << 1)
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: u8) {
        let bit = 1u64 << i;
        self.p &= !bit;
        self.m &= !bit;
        match x {
            0 => {}
            1 => self.p |= bit,
            2 => self.m |= bit,
            _ => panic!("entry {x} outside GF(3)"),
        }
    }

    #[inline]
    pub fn support_mask(&self) -> u64 {
        self.p | self.m
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.support_mask().count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.support_mask() == 0
    }

    #[inline]
    pub fn add(self, other: Word, field: Field) -> Word {
        match field {
            Field::F2 => Word {
                p: self.p ^ other.p,
                m: 0,
            },
            Field::F3 => {
                let t = (self.p | other.m) ^ (self.m | other.p);
                Word {
                    p: (self.m | other.m) ^ t,
                    m: (self.p | other.p) ^ t,
                }
            }
        }
    }

    #[inline]
    pub fn neg(self, field: Field) -> Word {
        match field {
            Field::F2 => self,
            Field::F3 => Word {
                p: self.m,
                m: self.p,
            },
        }
    }

    #[inline]
    pub fn scale(self, c: u8, field: Field) -> Word {
        match c {
            0 => Word::ZERO,
            1 => self,
            _ => self.neg(field),
        }
    }

    pub fn sub(self, other: Word, field: Field) -> Word {
        self.add(other.neg(field), field)
    }

    /// Dot product over the field.
    pub fn dot(&self, other: &Word, field: Field) -> u8 {
        match field {
            Field::F2 => ((self.p & other.p).count_ones() % 2) as u8,
            Field::F3 => {
                let same = (self.p & other.p) | (self.m & other.m);
                let opposite = (self.p & other.m) | (self.m & other.p);
                ((same.count_ones() + 2 * opposite.count_ones()) % 3) as u8
            }
        }
    }

    /// Sum of the entries.
    pub fn entry_sum(&self, field: Field) -> u8 {
        ((self.p.count_ones() + 2 * self.m.count_ones()) % field.q() as u32) as u8
    }

    /// Keeps the coordinates listed in `keep`, renumbered in order.
    pub fn select(&self, keep: &[usize]) -> Word {
        let mut w = Word::ZERO;
        for (j, &i) in keep.iter().enumerate() {
            w.set(j, self.get(i));
        }
        w
    }

    pub fn to_string(&self, n: usize) -> String {
        self.entries(n).iter().map(|x| char::from(b'0' + x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sliced_arithmetic_matches_scalar() {
        for field in [Field::F2, Field::F3] {
            let q = field.q();
            let xs: Vec<u8> = (0..20).map(|i| (i * 7 % 5) as u8 % q).collect();
            let ys: Vec<u8> = (0..20).map(|i| (i * 3 % 4) as u8 % q).collect();
            let (x, y) = (Word::from_entries(&xs), Word::from_entries(&ys));
            let sum: Vec<u8> = xs.iter().zip(&ys).map(|(&a, &b)| field.add(a, b)).collect();
            assert_eq!(x.add(y, field).entries(20), sum);
            assert!(x.add(x.neg(field), field).is_zero());
            let dot = xs.iter().zip(&ys).fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)));
            assert_eq!(x.dot(&y, field), dot);
        }
    }

    #[test]
    fn weights_and_selection() {
        let w = Word::from_entries(&[0, 2, 1, 0, 2]);
        assert_eq!(w.weight(), 3);
        assert_eq!(w.select(&[1, 3, 4]).entries(3), vec![2, 0, 2]);
        assert_eq!(w.to_string(5), "02102");
        assert_eq!(w.entry_sum(Field::F3), 2);
    }
}
