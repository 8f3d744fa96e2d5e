use rug::ops::Pow;
use rug::{Float, Integer};

/// `x` with exactly `digits` decimals, truncated toward zero.
pub fn truncate_decimal(x: &Float, digits: u32) -> String {
    let prec = x.prec() + 8;
    let scale = Float::with_val(prec, 10).pow(digits);
    let scaled = Float::with_val(prec, x.abs_ref()) * scale;
    let n: Integer = scaled.floor().to_integer().unwrap_or_default();
    let mut s = n.to_string();
    let width = digits as usize + 1;
    if s.len() < width {
        s = format!("{}{s}", "0".repeat(width - s.len()));
    }
    let (int, frac) = s.split_at(s.len() - digits as usize);
    let sign = if x.is_sign_negative() && n != 0 { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}
