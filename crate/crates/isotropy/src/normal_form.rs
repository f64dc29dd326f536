//! Normal forms (A, H, R), transition matrices U with A = U^{-1}𝒥U, and the
//! factorizations that carry H to the structured target forms.

use serde::Serialize;

use crate::commutant::CommutantShape;
use crate::error::{Error, Result};
use crate::exact::{
    block_shuffle_pairs, exchange, exp_nilpotent, gamma, inverse, jordan_block, shuffle,
    sign_diag, ExactMatrix, GaussianRational,
};
use crate::shape::{CaseTag, ShapeSpec};

type S = GaussianRational;

#[derive(Clone, Debug, Serialize)]
pub struct NormalFormBundle {
    pub case: CaseTag,
    pub c: u8,
    #[serde(rename = "A")]
    pub a: ExactMatrix,
    #[serde(rename = "H")]
    pub h: ExactMatrix,
    /// ε·exp(A); only materialized in the nilpotent case.
    #[serde(rename = "R")]
    pub r: Option<ExactMatrix>,
    #[serde(rename = "U")]
    pub u: ExactMatrix,
    #[serde(rename = "J")]
    pub j: ExactMatrix,
    /// Lower-left sign s of the pair form [[0, I], [s I, 0]]; always (−1)^{c+1}.
    pub pair_form_sign: i8,
    /// Ω̃ regrouping eigenvalues λ before −λ (nonzero case only).
    pub omega_tilde: Option<ExactMatrix>,
}

impl NormalFormBundle {
    pub fn n(&self) -> usize {
        self.a.rows()
    }
}

fn pair_sign(c: u8) -> i64 {
    if c == 1 {
        1
    } else {
        -1
    }
}

/// [[0, I_k], [s I_k, 0]]
fn pair_form(k: usize, s: i64) -> ExactMatrix {
    let mut h = ExactMatrix::zeros(2 * k, 2 * k);
    h.set_block(0, k, &ExactMatrix::identity(k));
    h.set_block(k, 0, &ExactMatrix::identity(k).scale_int(s));
    h
}

/// One nilpotent constituent (A_r, H_r, U_r, 𝒥_r). A pair J_α(0) ⊕ −J_α(0)^T
/// is required when c + α is odd and a single J_α(0) when it is even, so
/// c = 1 admits single blocks of odd size only and c = 2 of even size only.
pub fn nilpotent_block(
    c: u8,
    alpha: usize,
    paired: bool,
) -> Result<(ExactMatrix, ExactMatrix, ExactMatrix, ExactMatrix)> {
    if alpha == 0 || (c != 1 && c != 2) {
        return Err(Error::Shape(format!("no nilpotent block for c={c}, alpha={alpha}")));
    }
    let odd = (c as usize + alpha) % 2 == 1;
    let zero = S::zero();
    let jb = jordan_block(alpha, &zero);
    match (paired, odd) {
        (true, true) => {
            let a = jb.direct_sum(&-&jb.transpose());
            let h = pair_form(alpha, pair_sign(c));
            let u = ExactMatrix::identity(alpha).direct_sum(&gamma(alpha)?);
            let j = jb.direct_sum(&jb);
            Ok((a, h, u, j))
        }
        (false, false) => {
            let h = gamma(alpha)?;
            Ok((jb.clone(), h, ExactMatrix::identity(alpha), jb))
        }
        (false, true) => Err(Error::Parity(format!(
            "a single nilpotent block of size {alpha} needs c + alpha even (c = {c})"
        ))),
        (true, false) => Err(Error::Parity(format!(
            "a paired nilpotent block of size {alpha} needs c + alpha odd (c = {c})"
        ))),
    }
}

fn require(spec: &ShapeSpec, case: CaseTag) -> Result<()> {
    spec.validate()?;
    if spec.case() != case {
        return Err(Error::Shape(format!("expected a {case:?} spec")));
    }
    Ok(())
}

fn repeated(parts: &[(usize, ExactMatrix)]) -> ExactMatrix {
    let list: Vec<&ExactMatrix> = parts
        .iter()
        .flat_map(|(k, m)| std::iter::repeat_n(m, *k))
        .collect();
    ExactMatrix::direct_sum_all(list)
}

pub fn nilpotent_bundle(spec: &ShapeSpec) -> Result<NormalFormBundle> {
    require(spec, CaseTag::Nilpotent)?;
    let (mut a, mut h, mut u, mut j) = (vec![], vec![], vec![], vec![]);
    for r in 0..spec.n_blocks() {
        let (ar, hr, ur, jr) = nilpotent_block(spec.c, spec.alpha[r], spec.is_paired(r))?;
        let k = spec.m[r];
        a.push((k, ar));
        h.push((k, hr));
        u.push((k, ur));
        j.push((k, jr));
    }
    let a = repeated(&a);
    let eps = S::int(spec.epsilon.expect("validated") as i64);
    let r = exp_nilpotent(&a)?.scale(&eps);
    Ok(NormalFormBundle {
        case: CaseTag::Nilpotent,
        c: spec.c,
        a,
        h: repeated(&h),
        r: Some(r),
        u: repeated(&u),
        j: repeated(&j),
        pair_form_sign: pair_sign(spec.c) as i8,
        omega_tilde: None,
    })
}

/// Ω̃ = Ω̃_1 Ω̃_2 for a ±λ spec.
fn omega_tilde(spec: &ShapeSpec) -> ExactMatrix {
    let first: Vec<ExactMatrix> = spec
        .alpha
        .iter()
        .zip(&spec.m)
        .map(|(&a, &m)| shuffle(2, m).kron(&ExactMatrix::identity(a)))
        .collect();
    let sizes: Vec<usize> = spec.alpha.iter().zip(&spec.m).map(|(a, m)| a * m).collect();
    &ExactMatrix::direct_sum_all(&first) * &block_shuffle_pairs(&sizes)
}

pub fn nonzero_pair_bundle(spec: &ShapeSpec) -> Result<NormalFormBundle> {
    require(spec, CaseTag::NonzeroPair)?;
    let lambda = spec.lambda.clone().expect("validated");
    let s = pair_sign(spec.c);
    let (mut a, mut h, mut u, mut j) = (vec![], vec![], vec![], vec![]);
    for r in 0..spec.n_blocks() {
        let al = spec.alpha[r];
        let jl = jordan_block(al, &lambda);
        let k = spec.m[r];
        a.push((k, jl.direct_sum(&-&jl.transpose())));
        h.push((k, pair_form(al, s)));
        u.push((k, ExactMatrix::identity(al).direct_sum(&gamma(al)?)));
        j.push((k, jl.direct_sum(&jordan_block(al, &-&lambda))));
    }
    Ok(NormalFormBundle {
        case: CaseTag::NonzeroPair,
        c: spec.c,
        a: repeated(&a),
        h: repeated(&h),
        r: None,
        u: repeated(&u),
        j: repeated(&j),
        pair_form_sign: s as i8,
        omega_tilde: Some(omega_tilde(spec)),
    })
}

pub fn bundle(spec: &ShapeSpec) -> Result<NormalFormBundle> {
    match spec.case() {
        CaseTag::NonzeroPair => nonzero_pair_bundle(spec),
        _ => nilpotent_bundle(spec),
    }
}

/// Check that the eigenvalue classes of a list of parts are pairwise distinct
/// (λ_i ≠ ±λ_j, at most one nilpotent part) and share c.
pub fn check_mixed_parts(parts: &[ShapeSpec]) -> Result<()> {
    let first = parts
        .first()
        .ok_or_else(|| Error::Shape("no parts given".into()))?;
    for p in parts {
        p.validate()?;
        if p.c != first.c {
            return Err(Error::Shape("all parts must share c".into()));
        }
    }
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            let clash = match (&p.lambda, &q.lambda) {
                (None, None) => true,
                (Some(x), Some(y)) => x == y || *x == -y,
                _ => false,
            };
            if clash {
                return Err(Error::Shape("eigenvalue classes of two parts coincide".into()));
            }
        }
    }
    Ok(())
}

/// Direct sum of the constituent bundles in the given order.
pub fn build_mixed_normal_form(parts: &[ShapeSpec]) -> Result<NormalFormBundle> {
    check_mixed_parts(parts)?;
    let bundles = parts.iter().map(bundle).collect::<Result<Vec<_>>>()?;
    if bundles.len() == 1 {
        return Ok(bundles.into_iter().next().expect("one"));
    }
    let sum = |f: fn(&NormalFormBundle) -> &ExactMatrix| {
        ExactMatrix::direct_sum_all(bundles.iter().map(f))
    };
    Ok(NormalFormBundle {
        case: CaseTag::Mixed,
        c: parts[0].c,
        a: sum(|b| &b.a),
        h: sum(|b| &b.h),
        r: None,
        u: sum(|b| &b.u),
        j: sum(|b| &b.j),
        pair_form_sign: bundles[0].pair_form_sign,
        omega_tilde: None,
    })
}

/// Data carrying (U^{-1})^T H U^{-1} to the target form ℬ in the nilpotent case.
#[derive(Clone, Debug, Serialize)]
pub struct NilpotentFactorization {
    #[serde(rename = "E")]
    pub e: ExactMatrix,
    #[serde(rename = "D")]
    pub d: ExactMatrix,
    /// 𝓕 = Ω^T E Ω = ⊕_r E_{α_r}(I_{μ_r})
    pub exchange_shuffled: ExactMatrix,
    /// ℬ = Φ^T Ω^T D Ω Φ
    #[serde(rename = "B")]
    pub b: ExactMatrix,
    #[serde(rename = "Phi")]
    pub phi: ExactMatrix,
    /// B_r, so that ℬ = ⊕_r ⊕_j (−1)^{j−1} B_r.
    pub b_r: Vec<ExactMatrix>,
}

/// (U^{-1})^T H U^{-1} = E·D with E = ⊕ E_α over Jordan blocks and
/// D_r = [[0, −F], [F, 0]] for pairs, (−1)^α F for single blocks.
pub fn ed_decomposition(spec: &ShapeSpec) -> Result<(ExactMatrix, ExactMatrix)> {
    require(spec, CaseTag::Nilpotent)?;
    let nb = nilpotent_bundle(spec)?;
    let (mut es, mut ds) = (vec![], vec![]);
    for r in 0..spec.n_blocks() {
        let al = spec.alpha[r];
        let f = sign_diag(al);
        let (er, dr) = if spec.is_paired(r) {
            let mut d = ExactMatrix::zeros(2 * al, 2 * al);
            d.set_block(0, al, &-&f);
            d.set_block(al, 0, &f);
            (exchange(al, 1).direct_sum(&exchange(al, 1)), d)
        } else {
            let sgn = if al % 2 == 0 { 1 } else { -1 };
            (exchange(al, 1), f.scale_int(sgn))
        };
        es.push((spec.m[r], er));
        ds.push((spec.m[r], dr));
    }
    let (e, d) = (repeated(&es), repeated(&ds));
    let ui = inverse(&nb.u)?;
    let lhs = &(&ui.transpose() * &nb.h) * &ui;
    if lhs != &e * &d {
        return Err(Error::Identity("(U^-1)^T H U^-1 differs from E D".into()));
    }
    Ok((e, d))
}

/// B_r: [[0, I], [−I, 0]] for pairs and (−1)^{α+1} I for single blocks.
pub fn target_block(spec: &ShapeSpec, r: usize) -> ExactMatrix {
    let m = spec.m[r];
    if spec.is_paired(r) {
        let mut b = ExactMatrix::zeros(2 * m, 2 * m);
        b.set_block(0, m, &ExactMatrix::identity(m));
        b.set_block(m, 0, &-&ExactMatrix::identity(m));
        b
    } else {
        let sgn = if spec.alpha[r] % 2 == 1 { 1 } else { -1 };
        ExactMatrix::identity(m).scale_int(sgn)
    }
}

/// ⊕_r (I_{α_r} ⊗ Φ_r), Φ_r = Ω_{2,m_r} for pairs.
pub fn phi(spec: &ShapeSpec) -> ExactMatrix {
    let parts: Vec<ExactMatrix> = (0..spec.n_blocks())
        .map(|r| {
            let fr = if spec.is_paired(r) {
                shuffle(2, spec.m[r])
            } else {
                ExactMatrix::identity(spec.m[r])
            };
            ExactMatrix::identity(spec.alpha[r]).kron(&fr)
        })
        .collect();
    ExactMatrix::direct_sum_all(&parts)
}

pub fn commutant_shape(spec: &ShapeSpec) -> CommutantShape {
    CommutantShape::new(&spec.alpha, &spec.mu()).expect("validated spec")
}

/// ⊕_r ⊕_{j=1}^{α_r} (−1)^{j−1} B_r
pub fn alternating_form(alpha: &[usize], b_r: &[ExactMatrix]) -> ExactMatrix {
    let parts: Vec<ExactMatrix> = alpha
        .iter()
        .zip(b_r)
        .flat_map(|(&a, b)| (0..a).map(move |j| if j % 2 == 0 { b.clone() } else { -b }))
        .collect();
    ExactMatrix::direct_sum_all(&parts)
}

pub fn target_form(spec: &ShapeSpec) -> Result<NilpotentFactorization> {
    let (e, d) = ed_decomposition(spec)?;
    let shape = commutant_shape(spec);
    let omega = shape.omega();
    let ot = omega.transpose();
    let f_cal = &(&ot * &e) * &omega;
    let d_cal = &(&ot * &d) * &omega;
    let ph = phi(spec);
    let b = &(&ph.transpose() * &d_cal) * &ph;
    let b_r: Vec<ExactMatrix> = (0..spec.n_blocks()).map(|r| target_block(spec, r)).collect();
    let expect_f = ExactMatrix::direct_sum_all(
        &(0..spec.n_blocks())
            .map(|r| exchange(spec.alpha[r], shape.mu[r]))
            .collect::<Vec<_>>(),
    );
    if f_cal != expect_f {
        return Err(Error::Identity("Omega^T E Omega is not the block exchange".into()));
    }
    if b != alternating_form(&spec.alpha, &b_r) {
        return Err(Error::Identity("Phi^T D Phi is not the alternating target form".into()));
    }
    if &(&inverse(&ph)? * &f_cal) * &ph != f_cal {
        return Err(Error::Identity("Phi does not commute with the block exchange".into()));
    }
    Ok(NilpotentFactorization {
        e,
        d,
        exchange_shuffled: f_cal,
        b,
        phi: ph,
        b_r,
    })
}

/// Ψ = Φ^T Ω^T U
pub fn psi_conjugator_nilpotent(spec: &ShapeSpec) -> Result<ExactMatrix> {
    require(spec, CaseTag::Nilpotent)?;
    let nb = nilpotent_bundle(spec)?;
    let omega = commutant_shape(spec).omega();
    Ok(&(&phi(spec).transpose() * &omega.transpose()) * &nb.u)
}

/// Data carrying (U^{-1})^T H U^{-1} = D K to B K̃ in the ±λ case.
#[derive(Clone, Debug, Serialize)]
pub struct PairFactorization {
    #[serde(rename = "D")]
    pub d: ExactMatrix,
    #[serde(rename = "K")]
    pub k: ExactMatrix,
    /// B = Ω̃^T D Ω̃ = B_1 ⊕ (−1)^{c+1} B_1^T
    #[serde(rename = "B")]
    pub b: ExactMatrix,
    #[serde(rename = "K_tilde")]
    pub k_tilde: ExactMatrix,
    #[serde(rename = "B1")]
    pub b1: ExactMatrix,
    /// ℬ_1 = Ω^T B_1 Ω = ⊕_r (−1)^{α_r−1} Γ_{α_r} ⊗ I_{m_r}
    #[serde(rename = "B1_shuffled")]
    pub b1_shuffled: ExactMatrix,
}

pub fn pair_factorization(spec: &ShapeSpec) -> Result<PairFactorization> {
    let nb = nonzero_pair_bundle(spec)?;
    let s = pair_sign(spec.c);
    let (mut ds, mut ks, mut b1s, mut b1c) = (vec![], vec![], vec![], vec![]);
    for r in 0..spec.n_blocks() {
        let al = spec.alpha[r];
        let g = gamma(al)?;
        let top = g.scale_int(if al % 2 == 1 { 1 } else { -1 });
        // (−1)^{c+α} Γ^T
        let bottom = g.transpose().scale_int(if (spec.c as usize + al) % 2 == 0 { 1 } else { -1 });
        ds.push((spec.m[r], top.direct_sum(&bottom)));
        ks.push((spec.m[r], pair_form(al, 1)));
        b1s.push((spec.m[r], top.clone()));
        b1c.push(top.kron(&ExactMatrix::identity(spec.m[r])));
    }
    let (d, k, b1) = (repeated(&ds), repeated(&ks), repeated(&b1s));
    let ui = inverse(&nb.u)?;
    if &(&ui.transpose() * &nb.h) * &ui != &d * &k {
        return Err(Error::Identity("(U^-1)^T H U^-1 differs from D K".into()));
    }
    let ot = nb.omega_tilde.expect("nonzero bundle carries omega tilde");
    let b = &(&ot.transpose() * &d) * &ot;
    let k_tilde = &(&ot.transpose() * &k) * &ot;
    let half = b1.rows();
    if k_tilde != pair_form(half, 1) {
        return Err(Error::Identity("Omega~^T K Omega~ is not the block swap".into()));
    }
    if b != b1.direct_sum(&b1.transpose().scale_int(s)) {
        return Err(Error::Identity("Omega~^T D Omega~ is not B1 + sign B1^T".into()));
    }
    let omega = CommutantShape::new(&spec.alpha, &spec.m)?.omega();
    let b1_shuffled = &(&omega.transpose() * &b1) * &omega;
    if b1_shuffled != ExactMatrix::direct_sum_all(&b1c) {
        return Err(Error::Identity("Omega^T B1 Omega is not the shuffled Gamma sum".into()));
    }
    Ok(PairFactorization {
        d,
        k,
        b,
        k_tilde,
        b1,
        b1_shuffled,
    })
}

/// Ψ̃ = (I ⊕ ℬ_1)(Ω^T ⊕ Ω^T) Ω̃^T U
pub fn psi_conjugator_nonzero(spec: &ShapeSpec) -> Result<ExactMatrix> {
    let nb = nonzero_pair_bundle(spec)?;
    let fac = pair_factorization(spec)?;
    let half = fac.b1.rows();
    let omega = CommutantShape::new(&spec.alpha, &spec.m)?.omega();
    let left = ExactMatrix::identity(half).direct_sum(&fac.b1_shuffled);
    let ot = omega.transpose();
    let mid = ot.direct_sum(&ot);
    let omt = nb.omega_tilde.expect("present");
    Ok(&(&(&left * &mid) * &omt.transpose()) * &nb.u)
}

pub fn psi_conjugator(spec: &ShapeSpec) -> Result<ExactMatrix> {
    match spec.case() {
        CaseTag::NonzeroPair => psi_conjugator_nonzero(spec),
        _ => psi_conjugator_nilpotent(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::determinant;
    use crate::oracle::{is_h_automorphism, is_h_skew};

    fn nil(c: u8, alpha: &[usize], m: &[usize]) -> ShapeSpec {
        ShapeSpec::nilpotent(c, alpha, m, 1)
    }

    fn check_bundle(b: &NormalFormBundle) {
        assert!(is_h_skew(&b.a, &b.h).unwrap());
        let sign = if b.c == 1 { 1 } else { -1 };
        assert_eq!(b.h.transpose(), b.h.scale_int(sign));
        assert!(determinant(&b.h).unwrap().is_zero().then_some(()).is_none());
        assert_eq!(&(&inverse(&b.u).unwrap() * &b.j) * &b.u, b.a);
        if let Some(r) = &b.r {
            assert!(is_h_automorphism(r, &b.h).unwrap());
        }
    }

    #[test]
    fn smallest_nilpotent_bundle() {
        let b = nilpotent_bundle(&ShapeSpec::nilpotent(1, &[1], &[1], -1)).unwrap();
        assert_eq!(b.a, ExactMatrix::from_ints(&[&[0]]));
        assert_eq!(b.h, ExactMatrix::from_ints(&[&[1]]));
        assert_eq!(b.u, ExactMatrix::from_ints(&[&[1]]));
        assert_eq!(b.r.unwrap(), ExactMatrix::from_ints(&[&[-1]]));
    }

    #[test]
    fn paired_block_c1() {
        let b = nilpotent_bundle(&nil(1, &[2], &[1])).unwrap();
        let h = ExactMatrix::from_ints(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]);
        assert_eq!(b.h, h);
        check_bundle(&b);
    }

    #[test]
    fn single_block_c2() {
        let b = nilpotent_bundle(&nil(2, &[2], &[1])).unwrap();
        assert_eq!(b.a, ExactMatrix::from_ints(&[&[0, 1], &[0, 0]]));
        assert_eq!(b.h, ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn bundles_satisfy_identities() {
        for c in [1, 2] {
            for (alpha, m) in [(&[3, 2, 1][..], &[1, 2, 1][..]), (&[4, 1], &[1, 2]), (&[2], &[3])] {
                check_bundle(&nilpotent_bundle(&nil(c, alpha, m)).unwrap());
            }
        }
    }

    #[test]
    fn parity_rules_enforced() {
        assert!(matches!(nilpotent_block(1, 2, false), Err(Error::Parity(_))));
        assert!(matches!(nilpotent_block(2, 3, false), Err(Error::Parity(_))));
        assert!(matches!(nilpotent_block(1, 3, true), Err(Error::Parity(_))));
        assert!(nilpotent_block(1, 3, false).is_ok());
        assert!(nilpotent_block(2, 2, false).is_ok());
    }

    #[test]
    fn nonzero_bundles() {
        let b = nonzero_pair_bundle(&ShapeSpec::nonzero(2, &[1], &[1], S::one())).unwrap();
        assert_eq!(b.a, ExactMatrix::from_ints(&[&[1, 0], &[0, -1]]));
        assert_eq!(b.h, ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]));
        let b1 = nonzero_pair_bundle(&ShapeSpec::nonzero(1, &[1], &[1], S::one())).unwrap();
        assert_eq!(b1.h, ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]));
        for c in [1, 2] {
            let b = nonzero_pair_bundle(&ShapeSpec::nonzero(c, &[3, 1], &[1, 2], S::i())).unwrap();
            check_bundle(&b);
            let ot = b.omega_tilde.as_ref().unwrap();
            let jt = &(&ot.transpose() * &b.j) * ot;
            let plus = CommutantShape::new(&[3, 1], &[1, 2]).unwrap().jordan(&S::i());
            let minus = CommutantShape::new(&[3, 1], &[1, 2]).unwrap().jordan(&-S::i());
            assert_eq!(jt, plus.direct_sum(&minus));
        }
    }

    #[test]
    fn zero_lambda_rejected() {
        let mut s = ShapeSpec::nonzero(1, &[1], &[1], S::one());
        s.lambda = Some(S::zero());
        assert!(nonzero_pair_bundle(&s).is_err());
    }

    #[test]
    fn ed_examples() {
        let (e, d) = ed_decomposition(&nil(1, &[1], &[1])).unwrap();
        assert_eq!((e, d), (ExactMatrix::identity(1), ExactMatrix::identity(1)));
        let (_, d) = ed_decomposition(&nil(2, &[2], &[1])).unwrap();
        assert_eq!(d, sign_diag(2));
        let (_, d) = ed_decomposition(&nil(1, &[2], &[1])).unwrap();
        let f = sign_diag(2);
        let mut expect = ExactMatrix::zeros(4, 4);
        expect.set_block(0, 2, &-&f);
        expect.set_block(2, 0, &f);
        assert_eq!(d, expect);
    }

    #[test]
    fn target_blocks() {
        // single block: (−1)^{α+1}
        let t = target_form(&nil(2, &[2], &[1])).unwrap();
        assert_eq!(t.b_r[0], ExactMatrix::from_ints(&[&[-1]]));
        let t = target_form(&nil(1, &[3], &[1])).unwrap();
        assert_eq!(t.b_r[0], ExactMatrix::from_ints(&[&[1]]));
        let t = target_form(&nil(1, &[2], &[1])).unwrap();
        assert_eq!(t.b_r[0], ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]));
        let t = target_form(&nil(1, &[3, 1], &[2, 1])).unwrap();
        assert!(t.phi.is_identity());
    }

    #[test]
    fn target_forms_across_shapes() {
        for c in [1, 2] {
            for (alpha, m) in [(&[4, 3, 1][..], &[1, 2, 1][..]), (&[3, 2], &[2, 2]), (&[2], &[3])] {
                target_form(&nil(c, alpha, m)).unwrap();
            }
        }
    }

    #[test]
    fn psi_examples() {
        assert!(psi_conjugator_nilpotent(&nil(1, &[1], &[1])).unwrap().is_identity());
        assert!(psi_conjugator_nilpotent(&nil(1, &[1], &[2])).unwrap().is_identity());
        let p = psi_conjugator_nilpotent(&nil(2, &[3, 2], &[1, 2])).unwrap();
        assert!(!determinant(&p).unwrap().is_zero());
    }

    #[test]
    fn pair_factorizations() {
        for c in [1, 2] {
            pair_factorization(&ShapeSpec::nonzero(c, &[3, 2, 1], &[1, 2, 1], S::int(2))).unwrap();
        }
        let p = psi_conjugator_nonzero(&ShapeSpec::nonzero(1, &[1], &[1], S::one())).unwrap();
        assert_eq!(p.rows(), 2);
    }

    #[test]
    fn mixed_forms() {
        let nilp = nil(1, &[1], &[1]);
        let pair = ShapeSpec::nonzero(1, &[1], &[1], S::one());
        let single = build_mixed_normal_form(std::slice::from_ref(&pair)).unwrap();
        assert_eq!(single.a, nonzero_pair_bundle(&pair).unwrap().a);
        let b = build_mixed_normal_form(&[pair.clone(), nilp]).unwrap();
        assert_eq!(b.h, ExactMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]));
        check_bundle(&b);
        let neg = ShapeSpec::nonzero(1, &[2], &[1], S::int(-1));
        assert!(build_mixed_normal_form(&[pair, neg]).is_err());
        let c2 = build_mixed_normal_form(&[
            nil(2, &[2], &[1]),
            ShapeSpec::nonzero(2, &[1], &[1], S::i()),
        ])
        .unwrap();
        assert_eq!(
            c2.h,
            ExactMatrix::from_ints(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
        );
        check_bundle(&c2);
    }
}
