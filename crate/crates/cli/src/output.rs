//! Lossless text encoding of results.
//!
//! Every float is written with 17 significant digits in the style of C's
//! `%.17g`: positional for decimal exponents in `[-4, 17)`, scientific
//! otherwise, trailing zeros trimmed. Negative zero is written `-0.0` so JSON
//! readers keep its sign. Non-finite values become `null`.

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use std::io;

use sagnac_core::SweepRow;

pub fn format_g17(x: f64) -> String {
    if !x.is_finite() {
        return "null".to_owned();
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0.0".to_owned()
        } else {
            "0".to_owned()
        };
    }
    let sci = format!("{:.16e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let sign = if x < 0.0 { "-" } else { "" };

    if !(-4..17).contains(&exp) {
        let (lead, frac) = digits.split_at(1);
        let frac = frac.trim_end_matches('0');
        let exp_sign = if exp < 0 { '-' } else { '+' };
        let point = if frac.is_empty() { "" } else { "." };
        format!("{sign}{lead}{point}{frac}e{exp_sign}{:02}", exp.abs())
    } else if exp >= 0 {
        let (int, frac) = digits.split_at(exp as usize + 1);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("{sign}0.{zeros}{}", digits.trim_end_matches('0'))
    }
}

/// Pretty JSON layout with [`format_g17`] numbers.
struct G17Formatter(PrettyFormatter<'static>);

macro_rules! delegate {
    ($($name:ident($($arg:ident: $ty:ty),*)),* $(,)?) => {
        $(
            fn $name<W: ?Sized + io::Write>(&mut self, writer: &mut W $(, $arg: $ty)*) -> io::Result<()> {
                self.0.$name(writer $(, $arg)*)
            }
        )*
    };
}

impl Formatter for G17Formatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_g17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }

    delegate!(
        begin_array(),
        end_array(),
        begin_array_value(first: bool),
        end_array_value(),
        begin_object(),
        end_object(),
        begin_object_key(first: bool),
        begin_object_value(),
        end_object_value(),
    );
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Vec<u8> {
    let mut out = Vec::new();
    let mut ser =
        serde_json::Serializer::with_formatter(&mut out, G17Formatter(PrettyFormatter::new()));
    value
        .serialize(&mut ser)
        .expect("result types serialize infallibly");
    out.push(b'\n');
    out
}

pub const SWEEP_CSV_HEADER: &str = "value,delta,concurrence,entropy_bits,regime";

pub fn sweep_to_csv(rows: &[SweepRow]) -> Vec<u8> {
    let field = |v: Option<f64>| v.map(format_g17).unwrap_or_default();
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_g17(row.value),
            field(row.delta),
            field(row.concurrence),
            field(row.entropy_bits),
            row.regime.as_str()
        ));
    }
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn positional_and_scientific() {
        assert_eq!(format_g17(0.0), "0");
        assert_eq!(format_g17(1.0), "1");
        assert_eq!(format_g17(-2.5), "-2.5");
        assert_eq!(format_g17(0.0105), "0.010500000000000001");
        assert_eq!(format_g17(0.1), "0.10000000000000001");
        assert_eq!(format_g17(1e-5), "1.0000000000000001e-05");
        assert_eq!(format_g17(1e-4), "0.0001");
        assert_eq!(format_g17(299_792_458.0), "299792458");
        assert_eq!(format_g17(1e17), "1e+17");
        assert_eq!(format_g17(1.054_571_817e-34), "1.054571817e-34");
        assert_eq!(format_g17(f64::NAN), "null");
    }

    #[test]
    fn json_numbers_use_g17() {
        let out = String::from_utf8(to_json(&[0.1, 2.0])).unwrap();
        assert_eq!(out, "[\n  0.10000000000000001,\n  2\n]\n");
    }

    proptest! {
        #[test]
        fn g17_round_trips(bits in any::<u64>()) {
            let x = f64::from_bits(bits);
            prop_assume!(x.is_finite());
            let text = format_g17(x);
            let back: f64 = text.parse().unwrap();
            prop_assert_eq!(back.to_bits(), x.to_bits());
            let via_json: f64 = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(via_json.to_bits(), x.to_bits());
        }
    }
}
