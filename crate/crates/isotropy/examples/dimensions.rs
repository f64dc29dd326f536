// Closed-form centralizer dimensions against the brute-force Lie algebra.
use isotropy::engine::build_centralizer;
use isotropy::engine::dimension::nilpotent_dimension_variants;
use isotropy::oracle::lie_algebra_dimension;
use isotropy::{GaussianRational as S, ShapeSpec};

fn main() -> isotropy::Result<()> {
    let specs = [
        ShapeSpec::nilpotent(1, &[3, 1], &[1, 2], 1),
        ShapeSpec::nilpotent(2, &[3, 1], &[1, 1], 1),
        ShapeSpec::nilpotent(2, &[2], &[2], -1),
        ShapeSpec::nonzero(1, &[2, 1], &[1, 1], S::int(2)),
        ShapeSpec::nonzero(2, &[1], &[2], S::i()),
    ];
    for s in &specs {
        let model = build_centralizer(s)?;
        let oracle = lie_algebra_dimension(&model.bundle.a, &model.bundle.h)?;
        let extra = match nilpotent_dimension_variants(s) {
            Ok(v) => format!(" (unconditional-minus variant: {}/2)", v.minus_variant_twice),
            Err(_) => String::new(),
        };
        println!("c={} α={:?} m={:?}: formula {} oracle {oracle}{extra}", s.c, s.alpha, s.m, model.dimension);
    }
    Ok(())
}
