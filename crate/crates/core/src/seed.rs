//! Deriving per-case seeds from one top-level seed.
//!
//! `case_seed(top, label) = splitmix64(top ^ fnv1a64(label))`. A case can be
//! replayed from its label and the top-level seed alone, independently of
//! how cases are scheduled.

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

pub fn fnv1a64(text: &str) -> u64 {
    text.bytes()
        .fold(FNV_OFFSET, |h, b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn case_seed(top: u64, label: &str) -> u64 {
    splitmix64(top ^ fnv1a64(label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(fnv1a64(""), FNV_OFFSET);
        assert_eq!(fnv1a64("a"), 0xaf63_dc4c_8601_ec8c);
        // first output of the reference splitmix64 generator seeded with 0
        assert_eq!(splitmix64(0), 0xe220_a839_7b1d_cdaf);
    }

    #[test]
    fn labels_separate_seeds() {
        assert_ne!(case_seed(0, "a"), case_seed(0, "b"));
        assert_ne!(case_seed(0, "a"), case_seed(1, "a"));
        assert_eq!(case_seed(7, "x"), case_seed(7, "x"));
    }
}
