use nalgebra::{Cholesky, DMatrix, DVector};

use super::GaussianError;

/// A multivariate Gaussian N(mean, cov).
///
/// Covariance is kept symmetric with a non-negative diagonal; the constructor
/// rejects anything else.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianBelief {
    pub mean: DVector<f64>,
    pub cov: DMatrix<f64>,
}

impl GaussianBelief {
    pub fn new(mean: DVector<f64>, cov: DMatrix<f64>) -> Result<Self, GaussianError> {
        let n = mean.len();
        if cov.nrows() != n || cov.ncols() != n {
            return Err(GaussianError::DimensionMismatch {
                expected: n,
                got: cov.nrows(),
            });
        }
        let scale = cov.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
        for i in 0..n {
            for j in 0..i {
                if (cov[(i, j)] - cov[(j, i)]).abs() > 1e-12 * scale {
                    return Err(GaussianError::InvalidInput(format!(
                        "covariance not symmetric at ({i},{j})"
                    )));
                }
            }
            if cov[(i, i)] < -1e-12 * scale {
                return Err(GaussianError::InvalidInput(format!(
                    "negative variance at ({i},{i})"
                )));
            }
        }
        let mut cov = cov;
        // symmetrize residual rounding and clamp tiny negative variances
        for i in 0..n {
            for j in 0..i {
                let s = 0.5 * (cov[(i, j)] + cov[(j, i)]);
                cov[(i, j)] = s;
                cov[(j, i)] = s;
            }
            if cov[(i, i)] < 0.0 {
                cov[(i, i)] = 0.0;
            }
        }
        Ok(Self { mean, cov })
    }

    /// Diagonal belief from per-component standard deviations.
    pub fn from_std_devs(mean: DVector<f64>, std_devs: &[f64]) -> Result<Self, GaussianError> {
        if mean.len() != std_devs.len() {
            return Err(GaussianError::DimensionMismatch {
                expected: mean.len(),
                got: std_devs.len(),
            });
        }
        let cov = DMatrix::from_diagonal(&DVector::from_iterator(
            std_devs.len(),
            std_devs.iter().map(|s| s * s),
        ));
        Self::new(mean, cov)
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }
}

/// Jointly Gaussian (y, z) described by its mean and covariance blocks.
#[derive(Debug, Clone)]
pub struct JointGaussian {
    pub mean_y: DVector<f64>,
    pub mean_z: DVector<f64>,
    pub cov_yy: DMatrix<f64>,
    pub cov_yz: DMatrix<f64>,
    pub cov_zy: DMatrix<f64>,
    pub cov_zz: DMatrix<f64>,
}

impl JointGaussian {
    pub fn new(
        mean_y: DVector<f64>,
        mean_z: DVector<f64>,
        cov_yy: DMatrix<f64>,
        cov_yz: DMatrix<f64>,
        cov_zy: DMatrix<f64>,
        cov_zz: DMatrix<f64>,
    ) -> Result<Self, GaussianError> {
        let (ny, nz) = (mean_y.len(), mean_z.len());
        if cov_yy.shape() != (ny, ny)
            || cov_yz.shape() != (ny, nz)
            || cov_zy.shape() != (nz, ny)
            || cov_zz.shape() != (nz, nz)
        {
            return Err(GaussianError::InvalidInput(
                "joint covariance block shapes do not match the means".into(),
            ));
        }
        let scale = cov_yz
            .iter()
            .chain(cov_yy.iter())
            .chain(cov_zz.iter())
            .fold(0.0f64, |m, v| m.max(v.abs()))
            .max(1.0);
        for i in 0..nz {
            for j in 0..ny {
                if (cov_zy[(i, j)] - cov_yz[(j, i)]).abs() > 1e-12 * scale {
                    return Err(GaussianError::InvalidInput(
                        "cov_zy is not the transpose of cov_yz".into(),
                    ));
                }
            }
        }
        Ok(Self {
            mean_y,
            mean_z,
            cov_yy,
            cov_yz,
            cov_zy,
            cov_zz,
        })
    }
}

/// Default diagonal regularizer: 1e-9 × diag(cov), floored at 1e-12.
pub fn default_regularizer(cov: &DMatrix<f64>) -> DVector<f64> {
    DVector::from_iterator(
        cov.nrows(),
        (0..cov.nrows()).map(|i| (1e-9 * cov[(i, i)]).max(1e-12)),
    )
}

/// Cholesky factorization with escalating diagonal jitter.
///
/// Jitter starts at `floor` and escalates by decades up to `max_jitter`
/// relative to the largest diagonal entry; failure past that is reported as
/// numerical degeneracy.
pub(crate) fn regularized_cholesky(
    cov: &DMatrix<f64>,
    max_jitter: f64,
) -> Result<Cholesky<f64, nalgebra::Dyn>, GaussianError> {
    if let Some(ch) = Cholesky::new(cov.clone()) {
        return Ok(ch);
    }
    let scale = (0..cov.nrows())
        .map(|i| cov[(i, i)])
        .fold(0.0f64, f64::max)
        .max(1.0);
    let mut jitter = 1e-14;
    while jitter <= max_jitter {
        let mut c = cov.clone();
        for i in 0..c.nrows() {
            c[(i, i)] += jitter * scale;
        }
        if let Some(ch) = Cholesky::new(c) {
            return Ok(ch);
        }
        jitter *= 10.0;
    }
    Err(GaussianError::Degeneracy(
        "covariance not positive definite after jitter".into(),
    ))
}

/// Log of the Gaussian density of `x` under `belief`:
/// −½(x−μ)ᵀΣ⁻¹(x−μ) − ½ln|Σ| − (n/2)ln(2π).
pub fn log_density(x: &DVector<f64>, belief: &GaussianBelief) -> Result<f64, GaussianError> {
    let n = belief.dim();
    if x.len() != n {
        return Err(GaussianError::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    let ch = regularized_cholesky(&belief.cov, 1e-8)?;
    let diff = x - &belief.mean;
    let solved = ch.solve(&diff);
    let quad = diff.dot(&solved);
    let ln_det: f64 = ch.l().diagonal().iter().map(|d| d.ln()).sum::<f64>() * 2.0;
    Ok(-0.5 * quad - 0.5 * ln_det - 0.5 * (n as f64) * (2.0 * std::f64::consts::PI).ln())
}

/// Squared Mahalanobis distance with a diagonal regularizer A = diag(eps):
/// (x−μ)ᵀ(Σ+A)⁻¹(x−μ).
pub fn mahalanobis_sq(
    x: &DVector<f64>,
    belief: &GaussianBelief,
    regularizer: &DVector<f64>,
) -> Result<f64, GaussianError> {
    let n = belief.dim();
    if x.len() != n || regularizer.len() != n {
        return Err(GaussianError::DimensionMismatch {
            expected: n,
            got: x.len().max(regularizer.len()),
        });
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(GaussianError::InvalidInput("non-finite input vector".into()));
    }
    if regularizer.iter().any(|e| *e < 0.0) {
        return Err(GaussianError::InvalidInput(
            "regularizer entries must be non-negative".into(),
        ));
    }
    let mut cov = belief.cov.clone();
    for i in 0..n {
        cov[(i, i)] += regularizer[i];
    }
    let ch = regularized_cholesky(&cov, 1e-8)?;
    let diff = x - &belief.mean;
    Ok(diff.dot(&ch.solve(&diff)))
}

/// Condition y on an observed z in a joint Gaussian.
///
/// mean = μ_y + Σ_yz Σ_zz⁻¹ (z − μ_z); cov = Σ_yy − Σ_yz Σ_zz⁻¹ Σ_zy.
/// The output covariance is symmetrized and its diagonal clamped at zero.
pub fn condition(
    joint: &JointGaussian,
    z_observed: &DVector<f64>,
) -> Result<GaussianBelief, GaussianError> {
    if z_observed.len() != joint.mean_z.len() {
        return Err(GaussianError::DimensionMismatch {
            expected: joint.mean_z.len(),
            got: z_observed.len(),
        });
    }
    let ch = regularized_cholesky(&joint.cov_zz, 1e-8)?;
    let innovation = z_observed - &joint.mean_z;
    // K = Σ_yz Σ_zz⁻¹ via solving Σ_zz Kᵀ = Σ_zy
    let k_t = ch.solve(&joint.cov_zy);
    let gain = k_t.transpose();
    let mean = &joint.mean_y + &gain * innovation;
    let mut cov = &joint.cov_yy - &gain * &joint.cov_zy;
    let ny = cov.nrows();
    for i in 0..ny {
        for j in 0..i {
            let s = 0.5 * (cov[(i, j)] + cov[(j, i)]);
            cov[(i, j)] = s;
            cov[(j, i)] = s;
        }
        if cov[(i, i)] < 0.0 {
            cov[(i, i)] = 0.0;
        }
    }
    GaussianBelief::new(mean, cov)
}
