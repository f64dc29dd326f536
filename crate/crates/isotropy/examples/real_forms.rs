// Inertia of real symmetric forms and which target forms admit a real
// structure.
use isotropy::engine::{real_admissibility, signature, AlternatingFormPair};
use isotropy::ExactMatrix;

fn main() -> isotropy::Result<()> {
    let h = ExactMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -2]]);
    let (p, n, z) = signature(&h)?;
    println!("signature of H: {p} positive, {n} negative, {z} zero");

    let i1 = ExactMatrix::identity(1);
    for (alpha, b) in [(vec![1], vec![i1.clone()]), (vec![3, 1], vec![i1.clone(), -&i1])] {
        let forms = AlternatingFormPair::diagonal(1, &alpha, &b)?;
        println!("α={alpha:?}: real admissible = {}", real_admissibility(&forms)?);
    }
    Ok(())
}
