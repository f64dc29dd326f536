// Several eigenvalue classes at once: the centralizer is the direct sum
// of the per-class centralizers.
use isotropy::engine::build_mixed;
use isotropy::oracle::{automorphism_residual, commutator_residual, lie_algebra_dimension};
use isotropy::{GaussianRational as S, ShapeSpec};

fn main() -> isotropy::Result<()> {
    let parts = [
        ShapeSpec::nilpotent(1, &[2], &[1], 1),
        ShapeSpec::nonzero(1, &[1], &[1], S::int(2)),
        ShapeSpec::nonzero(1, &[2], &[1], S::i()),
    ];
    let model = build_mixed(&parts)?;
    println!("n = {}, dimension {} (oracle {})", model.n(), model.dimension,
        lie_algebra_dimension(&model.bundle.a, &model.bundle.h)?);
    for s in model.samples(3, 5)? {
        assert!(automorphism_residual(&s.q, &model.bundle.h)?.zero);
        assert!(commutator_residual(&s.q, &model.bundle.a)?.zero);
    }
    println!("5 samples verified");
    Ok(())
}
