use num_bigint::BigUint;
use num_traits::Zero;

use super::catalan::ceil_log2;
use crate::error::{Error, Result};

/// Finite advice: the oracle appends bits, the player reads them in order.
/// Reading past the written content is an error.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AdviceTape {
    bits: Vec<bool>,
    cursor: usize,
}

impl AdviceTape {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        AdviceTape { bits, cursor: 0 }
    }

    pub fn write_bit(&mut self, b: bool) {
        self.bits.push(b);
    }

    pub fn write_bits(&mut self, bits: &[bool]) {
        self.bits.extend_from_slice(bits);
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        let b = *self.bits.get(self.cursor).ok_or(Error::TapeExhausted {
            position: self.cursor,
            needed: 1,
        })?;
        self.cursor += 1;
        Ok(b)
    }

    pub fn read_bits(&mut self, k: usize) -> Result<Vec<bool>> {
        if self.cursor + k > self.bits.len() {
            return Err(Error::TapeExhausted {
                position: self.cursor,
                needed: self.cursor + k - self.bits.len(),
            });
        }
        let out = self.bits[self.cursor..self.cursor + k].to_vec();
        self.cursor += k;
        Ok(out)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bits_written(&self) -> usize {
        self.bits.len()
    }

    pub fn bits_read(&self) -> usize {
        self.cursor
    }

    pub fn rewind(&mut self) {
        self.cursor = 0;
    }
}

/// Writes `rank` in exactly `ceil(log2 universe)` bits, big-endian.
pub fn write_ranked(tape: &mut AdviceTape, rank: &BigUint, universe: &BigUint) -> Result<()> {
    if rank >= universe {
        return Err(Error::RankOutOfRange {
            rank: rank.to_string(),
            universe: universe.to_string(),
        });
    }
    let width = ceil_log2(universe);
    for b in (0..width).rev() {
        tape.write_bit(rank.bit(b as u64));
    }
    Ok(())
}

pub fn read_ranked(tape: &mut AdviceTape, universe: &BigUint) -> Result<BigUint> {
    let width = ceil_log2(universe);
    let mut r = BigUint::zero();
    for b in tape.read_bits(width)? {
        r = (r << 1u32) + BigUint::from(b as u32);
    }
    if r >= *universe {
        return Err(Error::RankOutOfRange {
            rank: r.to_string(),
            universe: universe.to_string(),
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths() {
        let mut t = AdviceTape::new();
        write_ranked(&mut t, &BigUint::zero(), &BigUint::from(1u32)).unwrap();
        assert_eq!(t.bits_written(), 0);
        write_ranked(&mut t, &BigUint::from(13u32), &BigUint::from(14u32)).unwrap();
        assert_eq!(t.bits_written(), 4);
        assert!(write_ranked(&mut t, &BigUint::from(14u32), &BigUint::from(14u32)).is_err());
    }

    #[test]
    fn roundtrip_all_small_universes() {
        for u in 1..=1024u32 {
            let universe = BigUint::from(u);
            let mut t = AdviceTape::new();
            for r in 0..u {
                write_ranked(&mut t, &BigUint::from(r), &universe).unwrap();
            }
            for r in 0..u {
                assert_eq!(read_ranked(&mut t, &universe).unwrap(), BigUint::from(r));
            }
            assert!(t.bits_read() == t.bits_written());
        }
    }

    #[test]
    fn exhausted() {
        let mut t = AdviceTape::from_bits(vec![true]);
        assert!(t.read_bit().unwrap());
        assert_eq!(t.read_bit(), Err(Error::TapeExhausted { position: 1, needed: 1 }));
        assert_eq!(t.read_bits(3), Err(Error::TapeExhausted { position: 1, needed: 3 }));
    }
}
