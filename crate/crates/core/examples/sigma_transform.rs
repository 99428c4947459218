//! Recovers F_T from X_T alone, once through the explicit σ coefficients and
//! once through scalar products with Ω_n, and compares with direct counting.

use chromsym::csf::csf_power_sum;
use chromsym::enumerate::enumerate_trees;
use chromsym::invariants::{f_polynomial_direct, f_polynomial_from_csf, OmegaKernel};

fn main() -> chromsym::Result<()> {
    let n = 8;
    let omega = OmegaKernel::new(n);
    let mut checked = 0;
    for t in enumerate_trees(n)? {
        let x = csf_power_sum(t.graph())?;
        let via_sigma = f_polynomial_from_csf(&x, n)?;
        let via_omega = omega.apply(&x.poly)?;
        let direct = f_polynomial_direct(&t)?;
        assert_eq!(via_sigma, direct);
        assert_eq!(via_omega, direct);
        checked += 1;
    }
    println!("F_T recovered from X_T for all {checked} trees on {n} vertices");
    if let Some(piece) = omega.piece(1, 1) {
        println!("Ω_{n} piece for x y has {} terms", piece.len());
    }
    Ok(())
}
