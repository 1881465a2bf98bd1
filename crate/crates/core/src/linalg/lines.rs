use crate::error::{Error, Result};

/// Default bound on `p^dim` for line enumeration.
pub const DEFAULT_LINE_CAP: u128 = 1 << 20;

/// One representative per 1-dimensional subspace of GF(p)^dim, first nonzero entry 1.
///
/// Lines come grouped by the position of the leading 1, leading position ascending;
/// within a group the trailing coordinates run in lexicographic order.
pub fn enumerate_lines(dim: usize, p: u32, cap: u128) -> Result<Lines> {
    let needed = (p as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    Ok(Lines { dim, p, lead: 0, tail: vec![0; dim.saturating_sub(1)], done: dim == 0 })
}

/// Number of lines in GF(p)^dim.
pub fn line_count(dim: usize, p: u32) -> u128 {
    ((p as u128).pow(dim as u32) - 1) / (p as u128 - 1)
}

/// Iterator returned by [`enumerate_lines`].
#[derive(Clone, Debug)]
pub struct Lines {
    dim: usize,
    p: u32,
    lead: usize,
    // Free coordinates after the leading 1; only the last `dim - lead - 1` are used.
    tail: Vec<u8>,
    done: bool,
}

impl Iterator for Lines {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let mut v = vec![0u8; self.dim];
        v[self.lead] = 1;
        let free = self.dim - self.lead - 1;
        v[self.lead + 1..].copy_from_slice(&self.tail[..free]);
        // Advance the odometer over the free coordinates, last coordinate fastest.
        let mut k = free;
        loop {
            if k == 0 {
                self.lead += 1;
                if self.lead == self.dim {
                    self.done = true;
                } else {
                    self.tail.iter_mut().for_each(|x| *x = 0);
                }
                break;
            }
            k -= 1;
            self.tail[k] += 1;
            if (self.tail[k] as u32) < self.p {
                break;
            }
            self.tail[k] = 0;
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_dimensional_over_gf2() {
        let lines: Vec<_> = enumerate_lines(2, 2, DEFAULT_LINE_CAP).unwrap().collect();
        assert_eq!(lines, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn one_dimensional() {
        let lines: Vec<_> = enumerate_lines(1, 5, DEFAULT_LINE_CAP).unwrap().collect();
        assert_eq!(lines, vec![vec![1]]);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_lines(3, 3, DEFAULT_LINE_CAP).unwrap().count(), 13);
        assert_eq!(enumerate_lines(0, 3, DEFAULT_LINE_CAP).unwrap().count(), 0);
        assert_eq!(line_count(3, 3), 13);
    }

    #[test]
    fn cap_exceeded() {
        let err = enumerate_lines(21, 2, DEFAULT_LINE_CAP).unwrap_err();
        assert_eq!(err, Error::CapExceeded { needed: 1 << 21, cap: 1 << 20 });
        assert!(enumerate_lines(20, 2, DEFAULT_LINE_CAP).is_ok());
    }
}
