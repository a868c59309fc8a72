//! JSON encodings of the core types.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};
use unifock::cartan::{Flavor, Order, Quiver, WeightVec};
use unifock::fock::{FockConfig, FockVector};
use unifock::partition::{Multipartition, Partition};
use unifock::unitary::{Block, HeckeParams};

/// A JSON document that does not match the expected schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaError(pub String);

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for SchemaError {}

type Result<T> = std::result::Result<T, SchemaError>;

fn bad(what: &str) -> SchemaError {
    SchemaError(format!("invalid {what}"))
}

pub fn partition(lam: &Partition) -> Value {
    json!(lam.parts())
}

pub fn multipartition(mu: &Multipartition) -> Value {
    Value::Array(mu.components().iter().map(partition).collect())
}

/// Flat character labels, as written on the command line.
pub fn labels<'a>(it: impl IntoIterator<Item = &'a Partition>) -> Value {
    Value::Array(it.into_iter().map(|l| Value::String(l.to_string())).collect())
}

pub fn rational(r: &BigRational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn order(o: Order) -> Value {
    match o {
        Order::Finite(e) => json!(e),
        Order::Infinite => json!("inf"),
    }
}

fn flavor(f: Flavor) -> &'static str {
    match f {
        Flavor::Square => "square",
        Flavor::Circ => "circ",
    }
}

pub fn weight(w: &WeightVec) -> Value {
    let q = w.quiver();
    let lambda: Map<String, Value> = w.lambda().iter().map(|(i, c)| (i.to_string(), json!(c))).collect();
    json!({"e": order(q.order), "flavor": flavor(q.flavor), "lambda": lambda, "delta": rational(w.delta())})
}

pub fn config(c: &FockConfig) -> Value {
    let q = c.quiver();
    json!({
        "e": order(q.order),
        "flavor": flavor(q.flavor),
        "charge": c.charge(),
        "offset": c.offset(),
        "gu": c.gu_parameter(),
    })
}

pub fn fock_vector(v: &FockVector) -> Value {
    let terms: Vec<Value> = v
        .terms()
        .iter()
        .map(|(mu, c)| json!({"mu": multipartition(mu), "coeff": rational(c)}))
        .collect();
    json!({"config": config(v.config()), "terms": terms})
}

pub fn block(b: &Block) -> Value {
    json!({"e": b.e(), "core": b.core(), "core_partition": partition(&b.core_partition()), "w": b.w()})
}

pub fn hecke(h: &HeckeParams) -> Value {
    json!({"t": h.t, "Q_exponents": h.q_exponents, "quadratic_exponent": h.quadratic_exponent})
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| SchemaError(format!("missing field {key:?}")))
}

fn int(v: &Value, what: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| bad(what))
}

fn ints(v: &Value, what: &str) -> Result<Vec<i64>> {
    v.as_array().ok_or_else(|| bad(what))?.iter().map(|x| int(x, what)).collect()
}

pub fn parse_partition(v: &Value) -> Result<Partition> {
    let parts = ints(v, "partition")?
        .into_iter()
        .map(|x| u32::try_from(x).map_err(|_| bad("partition")))
        .collect::<Result<Vec<_>>>()?;
    if parts.contains(&0) {
        return Err(bad("partition"));
    }
    Partition::new(parts).map_err(|_| bad("partition"))
}

pub fn parse_multipartition(v: &Value) -> Result<Multipartition> {
    let comps = v.as_array().ok_or_else(|| bad("multipartition"))?;
    Ok(Multipartition::new(comps.iter().map(parse_partition).collect::<Result<_>>()?))
}

pub fn parse_rational(v: &Value) -> Result<BigRational> {
    if let Some(n) = v.as_i64() {
        return Ok(BigRational::from_integer(n.into()));
    }
    let s = v.as_str().ok_or_else(|| bad("rational"))?;
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num: BigInt = num.trim().parse().map_err(|_| bad("rational"))?;
    let den: BigInt = den.trim().parse().map_err(|_| bad("rational"))?;
    if den == BigInt::from(0) {
        return Err(bad("rational"));
    }
    Ok(BigRational::new(num, den))
}

pub fn parse_order(v: &Value) -> Result<Order> {
    match v {
        Value::String(s) if s == "inf" => Ok(Order::Infinite),
        _ => {
            let e = int(v, "order")?;
            u32::try_from(e).ok().filter(|&e| e > 0).map(Order::Finite).ok_or_else(|| bad("order"))
        }
    }
}

fn parse_flavor(v: &Value) -> Result<Flavor> {
    match v.as_str() {
        Some("square") => Ok(Flavor::Square),
        Some("circ") => Ok(Flavor::Circ),
        _ => Err(bad("flavor")),
    }
}

fn parse_quiver(v: &Value) -> Result<Quiver> {
    Ok(Quiver { order: parse_order(field(v, "e")?)?, flavor: parse_flavor(field(v, "flavor")?)? })
}

pub fn parse_weight(v: &Value) -> Result<WeightVec> {
    let q = parse_quiver(v)?;
    let lambda = field(v, "lambda")?.as_object().ok_or_else(|| bad("lambda"))?;
    let coords = lambda
        .iter()
        .map(|(k, c)| Ok((k.parse::<i64>().map_err(|_| bad("vertex"))?, int(c, "coordinate")?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightVec::from_parts(q, coords, parse_rational(field(v, "delta")?)?))
}

pub fn parse_config(v: &Value) -> Result<FockConfig> {
    let q = parse_quiver(v)?;
    let charge = ints(field(v, "charge")?, "charge")?;
    if charge.is_empty() {
        return Err(bad("charge"));
    }
    match v.get("gu").filter(|g| !g.is_null()) {
        Some(t) => {
            let t = u32::try_from(int(t, "gu")?).map_err(|_| bad("gu"))?;
            let cfg = FockConfig::gu(q.order, t);
            if cfg.quiver() != q || cfg.charge() != charge.as_slice() {
                return Err(bad("gu configuration"));
            }
            Ok(cfg)
        }
        None => {
            let offset = match v.get("offset") {
                Some(o) => ints(o, "offset")?,
                None => vec![0; charge.len()],
            };
            FockConfig::with_offset(q, charge, offset).map_err(|_| bad("offset"))
        }
    }
}

pub fn parse_fock_vector(v: &Value) -> Result<FockVector> {
    let cfg = parse_config(field(v, "config")?)?;
    let terms = field(v, "terms")?.as_array().ok_or_else(|| bad("terms"))?;
    let parsed = terms
        .iter()
        .map(|t| {
            let coeff = match t.get("coeff") {
                Some(c) => parse_rational(c)?,
                None => BigRational::one(),
            };
            Ok((parse_multipartition(field(t, "mu")?)?, coeff))
        })
        .collect::<Result<Vec<_>>>()?;
    FockVector::from_terms(cfg, parsed).map_err(|_| bad("term level"))
}

/// A block given as `{"core": [...], "w": n}`, with an optional `"e"`.
pub fn parse_block(v: &Value, e: u32) -> Result<Block> {
    if let Some(given) = v.get("e") {
        if int(given, "e")? != e as i64 {
            return Err(bad("block order"));
        }
    }
    let core = ints(field(v, "core")?, "core")?;
    let w = usize::try_from(int(field(v, "w")?, "w")?).map_err(|_| bad("w"))?;
    Block::new(e, core, w).map_err(|err| SchemaError(err.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use unifock::cartan::{kappa_star, Order};
    use unifock::fock::FockConfig;
    use unifock::unitary::block_of;

    #[test]
    fn weight_round_trip() {
        let q = Quiver::circ(Order::Finite(4));
        let w = WeightVec::from_parts(q, [(0, 2), (3, -1)], BigRational::new(3.into(), 2.into()));
        assert_eq!(parse_weight(&weight(&w)).unwrap(), w);
        let k = kappa_star(&w).unwrap();
        assert_eq!(parse_weight(&weight(&k)).unwrap(), k);
    }

    #[test]
    fn vector_round_trip() {
        for cfg in [FockConfig::gu(Order::Finite(3), 2), FockConfig::circ_level1(Order::Finite(5), -1)] {
            let mu = Multipartition::empty(cfg.level());
            let v = FockVector::basis(cfg, mu).unwrap().scaled(&BigRational::new((-2).into(), 3.into()));
            assert_eq!(parse_fock_vector(&fock_vector(&v)).unwrap(), v);
        }
    }

    #[test]
    fn block_round_trip() {
        let b = block_of(&"4,1".parse().unwrap(), 3).unwrap();
        assert_eq!(parse_block(&block(&b), 3).unwrap(), b);
        assert!(parse_block(&block(&b), 4).is_err());
        assert!(parse_block(&json!({"core": [1, 0, 0], "w": 0}), 3).is_err());
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(parse_partition(&json!([1, 2])).is_err());
        assert!(parse_partition(&json!([2, 0])).is_err());
        assert_eq!(parse_partition(&json!([])).unwrap(), Partition::empty());
    }
}
