//! Text forms accepted on the command line.

use std::f64::consts::PI;

use strip_starlike::kernel::Alpha;
use strip_starlike::membership::RegionPredicate;
use strip_starlike::series::DEFAULT_ORDER;

use crate::CliError;

/// Environment variable overriding the default series order.
pub const ORDER_ENV: &str = "STRIP_STARLIKE_ORDER";

/// Parses an angle in radians (`1.8`) or as a multiple of pi
/// (`pi`, `pi/2`, `2pi/3`, `0.75*pi`, `3*pi/4`).
pub fn parse_angle(text: &str) -> Result<f64, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::validation(format!("cannot parse angle `{text}`"));
    let lower = s.to_ascii_lowercase().replace('π', "pi");
    let Some(at) = lower.find("pi") else {
        return lower.parse::<f64>().map_err(|_| bad());
    };
    let head = lower[..at].trim_end_matches('*');
    let tail = &lower[at + 2..];
    let numer = if head.is_empty() {
        1.0
    } else {
        head.parse::<f64>().map_err(|_| bad())?
    };
    let denom = match tail {
        "" => 1.0,
        t => t
            .strip_prefix('/')
            .ok_or_else(bad)?
            .parse::<f64>()
            .map_err(|_| bad())?,
    };
    let value = numer * PI / denom;
    if !value.is_finite() {
        return Err(bad());
    }
    Ok(value)
}

pub fn parse_alpha(text: &str) -> Result<Alpha, CliError> {
    Ok(Alpha::new(parse_angle(text)?)?)
}

/// `strip:A`, `starlike:B`, `strongly-starlike:G`, `parabolic` or
/// `lemniscate`.
pub fn parse_predicate(text: &str) -> Result<RegionPredicate, CliError> {
    let (name, arg) = match text.split_once(':') {
        Some((n, a)) => (n.trim(), Some(a.trim())),
        None => (text.trim(), None),
    };
    let number = |a: Option<&str>| -> Result<f64, CliError> {
        let a =
            a.ok_or_else(|| CliError::validation(format!("predicate `{name}` needs a parameter")))?;
        a.parse::<f64>()
            .map_err(|_| CliError::validation(format!("cannot parse predicate parameter `{a}`")))
    };
    let no_arg = |p: RegionPredicate| match arg {
        None => Ok(p),
        Some(_) => Err(CliError::validation(format!(
            "predicate `{name}` takes no parameter"
        ))),
    };
    match name {
        "strip" => {
            let a =
                arg.ok_or_else(|| CliError::validation("predicate `strip` needs an angle".into()))?;
            Ok(RegionPredicate::Strip(parse_alpha(a)?))
        }
        "starlike" => Ok(RegionPredicate::starlike(number(arg)?)?),
        "strongly-starlike" => Ok(RegionPredicate::strongly_starlike(number(arg)?)?),
        "parabolic" => no_arg(RegionPredicate::Parabolic),
        "lemniscate" => no_arg(RegionPredicate::Lemniscate),
        _ => Err(CliError::validation(format!("unknown predicate `{text}`"))),
    }
}

/// Explicit flag, then the environment value, then [`DEFAULT_ORDER`].
pub fn resolve_order(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match env {
        None => Ok(DEFAULT_ORDER),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::validation(format!("{ORDER_ENV}=`{v}` is not a series order"))),
    }
}
