//! Exact integer helpers: checked arithmetic, binomials, Catalan and
//! Fibonacci numbers, and the gaps of a two-generator numerical semigroup.
//!
//! Everything here is 64-bit and overflow is reported as
//! [`Error::Overflow`], never wrapped or saturated.

use crate::error::{Error, Result};

pub(crate) fn add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn sub(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

pub(crate) fn mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// Division that refuses to round.
pub(crate) fn div_exact(a: u64, b: u64, what: &'static str) -> Result<u64> {
    if b == 0 || !a.is_multiple_of(b) {
        return Err(Error::InexactDivision(what));
    }
    Ok(a / b)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// Uses the row recurrence `C(n, j) = C(n, j - 1) * (n - j + 1) / j`; every
/// intermediate quotient is itself a binomial coefficient, so the division is
/// exact. The product is formed in 128 bits before narrowing.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 1..=k {
        acc = acc * u128::from(n - j + 1) / u128::from(j);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// `C(n, 2)`, the number of unordered pairs.
pub fn choose2(n: u64) -> Result<u64> {
    binomial(n, 2)
}

/// Catalan numbers `c_0..=c_n` by the convolution recurrence
/// `c_{m+1} = sum c_i c_{m-i}`. No division is involved.
pub fn catalan_table(n: usize) -> Result<Vec<u64>> {
    let mut c = Vec::with_capacity(n + 1);
    c.push(1u64);
    for m in 0..n {
        let mut next = 0u64;
        for i in 0..=m {
            next = add(next, mul(c[i], c[m - i], "Catalan number")?, "Catalan number")?;
        }
        c.push(next);
    }
    Ok(c)
}

pub fn catalan(n: u64) -> Result<u64> {
    let n = usize::try_from(n).map_err(|_| Error::Overflow("Catalan number"))?;
    Ok(catalan_table(n)?[n])
}

/// Central binomial `C(2n, n)`.
pub fn central_binomial(n: u64) -> Result<u64> {
    binomial(mul(2, n, "central binomial")?, n)
}

/// Fibonacci numbers with `F_1 = F_2 = 1` (and `F_0 = 0`).
pub fn fibonacci(n: u64) -> Result<u64> {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        let next = add(a, b, "Fibonacci number")?;
        a = b;
        b = next;
    }
    Ok(a)
}

/// `4^k` with overflow checking.
pub fn power_of_four(k: u64) -> Result<u64> {
    let k = u32::try_from(k).map_err(|_| Error::Overflow("power of four"))?;
    4u64.checked_pow(k).ok_or(Error::Overflow("power of four"))
}

/// Rational Catalan number `C(s + t, s) / (s + t)` for coprime `s, t`.
pub fn rational_catalan(s: u64, t: u64) -> Result<u64> {
    check_coprime(s, t)?;
    let n = add(s, t, "rational Catalan number")?;
    div_exact(binomial(n, s)?, n, "rational Catalan number")
}

pub(crate) fn check_coprime(s: u64, t: u64) -> Result<()> {
    if s == 0 || t == 0 || s == t || num_integer::gcd(s, t) != 1 {
        return Err(Error::NotCoprime { s, t });
    }
    Ok(())
}

/// Frobenius number `st - s - t` of the semigroup generated by coprime `s, t`
/// (`None` when the semigroup has no gaps, i.e. one generator is 1).
pub fn frobenius_number(s: u64, t: u64) -> Result<Option<u64>> {
    check_coprime(s, t)?;
    let st = mul(s, t, "Frobenius number")?;
    Ok(st.checked_sub(s + t).filter(|_| s > 1 && t > 1))
}

/// Positive integers not of the form `a*s + b*t` with `a, b >= 0`, ascending.
pub fn semigroup_gaps(s: u64, t: u64) -> Result<Vec<u64>> {
    let Some(frobenius) = frobenius_number(s, t)? else {
        return Ok(Vec::new());
    };
    let limit = usize::try_from(frobenius).map_err(|_| Error::Overflow("gap sieve"))?;
    let mut representable = vec![false; limit + 1];
    representable[0] = true;
    for n in 1..=limit {
        let n64 = n as u64;
        representable[n] = (n64 >= s && representable[n - s as usize]) || (n64 >= t && representable[n - t as usize]);
    }
    Ok((1..=limit).filter(|&n| !representable[n]).map(|n| n as u64).collect())
}
