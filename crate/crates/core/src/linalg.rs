//! Gaussian elimination over GF(2) on packed 64-bit rows.

/// Rank and kernel of a GF(2) matrix given by its columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub rank: usize,
    /// Each entry is a coefficient mask over the input columns whose
    /// combination vanishes; the entries form a basis of the kernel.
    pub basis: Vec<u64>,
}

impl Kernel {
    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    /// Every kernel element, as coefficient masks (2^nullity of them).
    pub fn span(&self) -> Vec<u64> {
        let mut out = vec![0u64];
        for &b in &self.basis {
            let n = out.len();
            for i in 0..n {
                out.push(out[i] ^ b);
            }
        }
        out
    }
}

/// Kernel of the linear map sending unit vector `e_j` to `columns[j]`.
/// At most 64 columns.
pub fn kernel(columns: &[u64]) -> Kernel {
    assert!(columns.len() <= 64, "at most 64 columns");
    // pivots[h] holds a reduced vector with leading bit h and its column mask.
    let mut pivots: [Option<(u64, u64)>; 64] = [None; 64];
    let mut rank = 0;
    let mut basis = Vec::new();
    for (j, &col) in columns.iter().enumerate() {
        let mut v = col;
        let mut comb = 1u64 << j;
        loop {
            if v == 0 {
                basis.push(comb);
                break;
            }
            let h = 63 - v.leading_zeros() as usize;
            match pivots[h] {
                Some((pv, pc)) => {
                    v ^= pv;
                    comb ^= pc;
                }
                None => {
                    pivots[h] = Some((v, comb));
                    rank += 1;
                    break;
                }
            }
        }
    }
    Kernel { rank, basis }
}

/// Combine `vectors` according to the coefficient mask.
pub fn combine<T: Copy + std::ops::BitXor<Output = T>>(vectors: &[T], zero: T, mask: u64) -> T {
    vectors
        .iter()
        .enumerate()
        .filter(|(j, _)| mask >> j & 1 == 1)
        .fold(zero, |acc, (_, &v)| acc ^ v)
}
