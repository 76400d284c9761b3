use crate::error::{check_k, Result};

/// Worst-case performance ratio bound of Approx1 for paths of order >= k.
///
/// `12/5` for `k = 4`; otherwise `(3k+1)/2 - sqrt(18k^2 - 3)/4` for odd `k`
/// and `(3k+1)/2 - sqrt(18k^2 - 21)/4` for even `k`.
pub fn theoretical_ratio(k: usize) -> Result<f64> {
    check_k(k)?;
    if k == 4 {
        return Ok(12.0 / 5.0);
    }
    let kf = k as f64;
    let c = if k % 2 == 1 { 3.0 } else { 21.0 };
    Ok((3.0 * kf + 1.0) / 2.0 - (18.0 * kf * kf - c).sqrt() / 4.0)
}
