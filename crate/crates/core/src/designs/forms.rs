use crate::error::{Error, Result};

/// `V = GF(2)^{2m}` with the quadratic form `θ(u) = Σ u_i u_{m+i}` and its
/// polarization `φ(u, v) = θ(u+v) + θ(u) + θ(v)`.
///
/// Vectors are integers; bit `i` holds coordinate `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticFormSpace {
    m: u32,
}

impl QuadraticFormSpace {
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=15).contains(&m) {
            return Err(Error::InvalidArgument(format!("form rank m = {m} out of range")));
        }
        Ok(QuadraticFormSpace { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn dimension(&self) -> u32 {
        2 * self.m
    }

    pub fn size(&self) -> u32 {
        1 << (2 * self.m)
    }

    fn low_mask(&self) -> u32 {
        (1 << self.m) - 1
    }

    /// `u e uᵀ` with `e = [[0, I], [0, 0]]`.
    #[inline]
    pub fn theta(&self, u: u32) -> u32 {
        (u & (u >> self.m) & self.low_mask()).count_ones() & 1
    }

    /// `u f vᵀ` with `f = e + eᵀ`.
    #[inline]
    pub fn phi(&self, u: u32, v: u32) -> u32 {
        let lo = self.low_mask();
        ((u & (v >> self.m) & lo).count_ones() + ((u >> self.m) & v & lo).count_ones()) & 1
    }

    /// `θ_v(u) = θ(u) + φ(u, v)`.
    #[inline]
    pub fn theta_v(&self, v: u32, u: u32) -> u32 {
        self.theta(u) ^ self.phi(u, v)
    }

    /// The matrices `e` and `f` as rows of bits (row `i` is coordinate `i + 1`).
    pub fn matrices(&self) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
        let d = self.dimension() as usize;
        let m = self.m as usize;
        let mut e = vec![vec![0u8; d]; d];
        let mut f = vec![vec![0u8; d]; d];
        for i in 0..m {
            e[i][m + i] = 1;
            f[i][m + i] = 1;
            f[m + i][i] = 1;
        }
        (e, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `u M vᵀ` computed straight from a matrix.
    fn bilinear(mat: &[Vec<u8>], u: u32, v: u32) -> u32 {
        let d = mat.len();
        let mut s = 0;
        for i in 0..d {
            for j in 0..d {
                s ^= ((u >> i) & 1) * mat[i][j] as u32 * ((v >> j) & 1);
            }
        }
        s
    }

    #[test]
    fn polarization_identity_holds_exhaustively() {
        for m in 1..=4 {
            let q = QuadraticFormSpace::new(m).unwrap();
            let (e, f) = q.matrices();
            for u in 0..q.size() {
                assert_eq!(q.theta(u), bilinear(&e, u, u));
                for v in 0..q.size() {
                    assert_eq!(q.theta(u ^ v) ^ q.theta(u) ^ q.theta(v), q.phi(u, v));
                    assert_eq!(q.phi(u, v), bilinear(&f, u, v));
                }
            }
        }
    }

    #[test]
    fn f_is_e_plus_transpose() {
        let q = QuadraticFormSpace::new(3).unwrap();
        let (e, f) = q.matrices();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(f[i][j], e[i][j] ^ e[j][i]);
            }
        }
    }

    #[test]
    fn theta_zero_is_theta() {
        let q = QuadraticFormSpace::new(2).unwrap();
        for u in 0..16 {
            assert_eq!(q.theta_v(0, u), q.theta(u));
        }
    }
}
