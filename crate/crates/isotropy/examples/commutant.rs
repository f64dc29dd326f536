// The commutant of a Jordan matrix: rectangular upper-triangular Toeplitz
// blocks, brought together by a perfect shuffle.
use isotropy::commutant::{commutant_basis, BlockToeplitzMatrix, CommutantShape};
use isotropy::engine::sampling;
use isotropy::exact::shuffle;
use isotropy::oracle::commutant_dimension;
use isotropy::GaussianRational as S;

fn main() -> isotropy::Result<()> {
    let shape = CommutantShape::new(&[3, 2], &[1, 2])?;
    let fam = commutant_basis(&shape, &S::zero());
    let j = fam.jordan();
    println!("structured dimension {} vs brute force {}", fam.dimension(), commutant_dimension(&[&j])?);

    let mut g = sampling::rng(1);
    let mut x = BlockToeplitzMatrix::identity(&shape);
    x.set_coeff(1, 0, 0, sampling::matrix(&mut g, 2, 1))?;
    x.set_coeff(0, 0, 1, sampling::matrix(&mut g, 1, 1))?;
    let xi = x.inverse()?;
    println!("X =\n{}\nX⁻¹ =\n{}", x.to_dense(), xi.to_dense());
    assert!(x.mul(&xi)? == BlockToeplitzMatrix::identity(&shape));

    println!("Ω_(3,2) =\n{}", shuffle(3, 2));
    Ok(())
}
