use super::tape::AdviceTape;
use crate::error::{Error, Result};

fn floor_log2(m: u64) -> u32 {
    63 - m.leading_zeros()
}

/// Elias delta code of `m >= 1`, most significant bit first.
pub fn elias_delta_encode(m: u64) -> Vec<bool> {
    assert!(m >= 1, "Elias delta codes positive integers only");
    let n = floor_log2(m);
    let l = floor_log2(n as u64 + 1);
    let mut bits = vec![false; l as usize];
    for b in (0..=l).rev() {
        bits.push((n as u64 + 1) >> b & 1 == 1);
    }
    for b in (0..n).rev() {
        bits.push(m >> b & 1 == 1);
    }
    bits
}

/// `floor(log m) + 2 floor(log(floor(log m) + 1)) + 1`.
pub fn elias_delta_len(m: u64) -> usize {
    let n = floor_log2(m);
    (n + 2 * floor_log2(n as u64 + 1) + 1) as usize
}

/// Reads one Elias delta code from the cursor.
pub fn elias_delta_decode(tape: &mut AdviceTape) -> Result<u64> {
    let bit = |tape: &mut AdviceTape| tape.read_bit().map_err(|_| Error::TruncatedCode);
    let mut l = 0;
    while !bit(tape)? {
        l += 1;
        if l > 6 {
            return Err(Error::Parse("Elias delta code longer than 64 bits".into()));
        }
    }
    let mut n_plus_1: u64 = 1;
    for _ in 0..l {
        n_plus_1 = n_plus_1 << 1 | bit(tape)? as u64;
    }
    let n = n_plus_1 - 1;
    if n > 63 {
        return Err(Error::Parse("Elias delta code longer than 64 bits".into()));
    }
    let mut m: u64 = 1;
    for _ in 0..n {
        m = m << 1 | bit(tape)? as u64;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(bits: &[bool]) -> String {
        bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    #[test]
    fn known_codes() {
        assert_eq!(s(&elias_delta_encode(1)), "1");
        assert_eq!(s(&elias_delta_encode(2)), "0100");
        assert_eq!(s(&elias_delta_encode(17)), "001010001");
        assert_eq!(s(&elias_delta_encode(10000)), "00011100011100010000");
    }

    #[test]
    fn roundtrip_and_prefix_free() {
        let mut tape = AdviceTape::new();
        let mut codes = Vec::new();
        for m in 1..=10_000u64 {
            let c = elias_delta_encode(m);
            assert_eq!(c.len(), elias_delta_len(m));
            tape.write_bits(&c);
            codes.push(s(&c));
        }
        for m in 1..=10_000u64 {
            assert_eq!(elias_delta_decode(&mut tape).unwrap(), m);
        }
        assert_eq!(tape.bits_read(), tape.bits_written());
        let mut sorted = codes.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            assert!(!w[1].starts_with(&w[0]), "{} prefixes {}", w[0], w[1]);
        }
        let big = u64::MAX;
        let mut t = AdviceTape::new();
        t.write_bits(&elias_delta_encode(big));
        assert_eq!(elias_delta_decode(&mut t).unwrap(), big);
    }

    #[test]
    fn truncated() {
        let mut tape = AdviceTape::new();
        tape.write_bits(&elias_delta_encode(17)[..5]);
        assert_eq!(elias_delta_decode(&mut tape), Err(Error::TruncatedCode));
    }
}
