//! Display conventions: half-up percentages and truncated ratios.
//!
//! Analyses keep full precision. These helpers only produce strings, and
//! where the input is an integer ratio they work in integer arithmetic so
//! that e.g. 1/8 = 12.5% never flips because of binary floating point.

/// `num/den` as a percentage rounded half-up to `decimals` places.
/// Returns `None` when `den` is zero.
pub fn percent(num: u64, den: u64, decimals: u32) -> Option<String> {
    ratio_half_up(num as u128 * 100, den as u128, decimals)
}

/// `num/den` rounded half-up to `decimals` places.
pub fn ratio_half_up(num: u128, den: u128, decimals: u32) -> Option<String> {
    if den == 0 {
        return None;
    }
    let scale = 10u128.pow(decimals);
    let scaled = (2 * num * scale + den) / (2 * den);
    Some(fixed(scaled, decimals))
}

/// `num/den` truncated (floored) to `decimals` places.
pub fn ratio_truncated(num: u128, den: u128, decimals: u32) -> Option<String> {
    if den == 0 {
        return None;
    }
    let scale = 10u128.pow(decimals);
    Some(fixed(num * scale / den, decimals))
}

fn fixed(scaled: u128, decimals: u32) -> String {
    if decimals == 0 {
        return scaled.to_string();
    }
    let scale = 10u128.pow(decimals);
    format!(
        "{}.{:0width$}",
        scaled / scale,
        scaled % scale,
        width = decimals as usize
    )
}

/// Half-up rounding of a non-negative float to `decimals` places.
pub fn round_half_up(x: f64, decimals: u32) -> f64 {
    let s = 10f64.powi(decimals as i32);
    (x * s + 0.5).floor() / s
}

/// Floor of a float to `decimals` places, the usual display for impact factors.
pub fn truncate(x: f64, decimals: u32) -> f64 {
    let s = 10f64.powi(decimals as i32);
    (x * s).floor() / s
}

/// Fixed-point string of a float.
pub fn real(x: f64, decimals: usize) -> String {
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn percent_is_half_up() {
        assert_eq!(percent(1, 8, 2).unwrap(), "12.50");
        assert_eq!(percent(1, 8, 1).unwrap(), "12.5");
        assert_eq!(percent(1, 8, 0).unwrap(), "13");
        assert_eq!(percent(122, 139, 2).unwrap(), "87.77");
        assert_eq!(percent(173, 6958, 2).unwrap(), "2.49");
        assert_eq!(percent(0, 5, 2).unwrap(), "0.00");
        assert!(percent(1, 0, 2).is_none());
    }

    #[test]
    fn truncation_floors() {
        assert_eq!(ratio_truncated(89, 235, 3).unwrap(), "0.378");
        assert_eq!(ratio_truncated(75, 204, 3).unwrap(), "0.367");
        assert_eq!(ratio_half_up(75, 204, 3).unwrap(), "0.368");
        assert_eq!(ratio_truncated(3, 1, 3).unwrap(), "3.000");
    }

    #[test]
    fn float_helpers() {
        assert_eq!(round_half_up(2.405, 1), 2.4);
        assert_eq!(round_half_up(0.125, 2), 0.13);
        assert_eq!(truncate(0.37872, 3), 0.378);
        assert_eq!(real(1.0 / 3.0, 4), "0.3333");
    }
}
