/// 128-bit FNV-1a. Fixed offset basis and prime, so digests are stable
/// across runs and platforms.
#[derive(Clone, Copy, Debug)]
pub struct Fnv1a128(u128);

const OFFSET_BASIS: u128 = 0x6c62272e07bb014262b821756295c58d;
const PRIME: u128 = 0x0000000001000000000000000000013b;

impl Default for Fnv1a128 {
    fn default() -> Self {
        Self(OFFSET_BASIS)
    }
}

impl Fnv1a128 {
    pub fn update(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u128::from(b);
            self.0 = self.0.wrapping_mul(PRIME);
        }
    }

    pub fn finish(&self) -> u128 {
        self.0
    }
}

pub fn fnv1a_128(bytes: &[u8]) -> u128 {
    let mut h = Fnv1a128::default();
    h.update(bytes);
    h.finish()
}
