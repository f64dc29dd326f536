// Gaussian rationals and fraction-free elimination: every answer is exact.
use isotropy::exact::{determinant, inverse, nullspace, rank};
use isotropy::{ExactMatrix, GaussianRational as S};

fn main() -> isotropy::Result<()> {
    let z = S::complex(1, 2, -3, 4); // 1/2 − 3/4 i
    println!("z = {z}, z⁻¹ = {}, z·z̄ = {}", z.inv(), &z * &z.conj());

    let m = ExactMatrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
    println!("det = {}", determinant(&m)?);
    let mi = inverse(&m)?;
    println!("M⁻¹ =\n{mi}");
    assert_eq!(&m * &mi, ExactMatrix::identity(3));

    let singular = ExactMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let kernel = nullspace(&singular);
    println!("rank {}, kernel basis as columns:\n{kernel}", rank(&singular));
    assert!((&singular * &kernel).is_zero());
    Ok(())
}
