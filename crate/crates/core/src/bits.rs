//! Helpers for `u64` vertex sets.

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Mask with the low `n` bits set (`n <= 64`).
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Next integer with the same popcount (Gosper's hack). Returns `None` on overflow.
#[inline]
pub fn next_combination(x: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Scatter the low bits of `compact` onto the positions listed in `slots`.
#[inline]
pub fn deposit(compact: u64, slots: &[u8]) -> u64 {
    let mut out = 0;
    for i in Bits(compact) {
        out |= bit(slots[i] as usize);
    }
    out
}
