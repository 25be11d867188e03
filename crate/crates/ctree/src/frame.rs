//! Frame encoding and the bit-exact wire format.
//!
//! A frame carries `frame_length` symbols of `n` bits. Each encoded symbol
//! holds the payload in its top k bits and the state-derived redundancy in
//! its low R bits. On the wire, symbols are packed most-significant-bit
//! first into a big-endian bit stream, padded with zero bits to a byte
//! boundary, followed by the 64-bit final state in little-endian byte order.

use crate::config::CodeConfig;
use crate::error::{Error, Result};
use crate::table::TransitionTable;

/// One encoded frame: the payload symbols, their encoded forms, and the
/// encoder's final system state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    /// k-bit payload values, one per symbol.
    pub payload: Vec<u16>,
    /// n-bit encoded symbols.
    pub encoded: Vec<u16>,
    /// System state after the last symbol.
    pub final_state: u64,
}

/// Runs the encoder over a payload: absorb each symbol into the state,
/// transmit the payload concatenated with the redundancy the transition
/// shifts out, and report the final state.
pub fn encode_frame(
    payload: &[u16],
    config: &CodeConfig,
    table: &TransitionTable,
) -> Result<Frame> {
    if payload.len() != config.frame_length as usize {
        return Err(Error::Input(format!(
            "payload has {} symbols but frame_length is {}",
            payload.len(),
            config.frame_length
        )));
    }
    let r = config.redundancy_bits as u32;
    let payload_limit = 1u16 << config.payload_bits;
    let mut state = config.initial_state();
    let mut encoded = Vec::with_capacity(payload.len());
    for (i, &value) in payload.iter().enumerate() {
        if value >= payload_limit {
            return Err(Error::Input(format!(
                "payload symbol {i} is {value}, must be < 2^k = {payload_limit}"
            )));
        }
        let symbol = (value << r) | table.emitted_redundancy(state, value);
        let (next, check) = table.step_forward(state, symbol);
        debug_assert!(check, "encoder output must pass its own check");
        state = next;
        encoded.push(symbol);
    }
    Ok(Frame {
        payload: payload.to_vec(),
        encoded,
        final_state: state,
    })
}

/// Wire size of a frame: symbol bits padded to bytes, plus the final state.
pub fn packed_len(config: &CodeConfig) -> usize {
    let symbol_bits = config.frame_length as usize * config.symbol_bits as usize;
    symbol_bits.div_ceil(8) + 8
}

/// Serializes a frame: n-bit symbols MSB-first into a big-endian bit
/// stream, zero padding to a byte boundary, then the final state as 8
/// little-endian bytes.
pub fn pack_frame(frame: &Frame, config: &CodeConfig) -> Vec<u8> {
    let n = config.symbol_bits as usize;
    let mut bytes = vec![0u8; packed_len(config)];
    let mut bit = 0usize;
    for &symbol in &frame.encoded {
        for i in (0..n).rev() {
            if (symbol >> i) & 1 == 1 {
                bytes[bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    let state_offset = bytes.len() - 8;
    bytes[state_offset..].copy_from_slice(&frame.final_state.to_le_bytes());
    bytes
}

/// Inverse of [`pack_frame`]. The returned payload is the systematic part
/// of the received symbols (their top k bits), before any correction.
pub fn unpack_frame(bytes: &[u8], config: &CodeConfig) -> Result<Frame> {
    let expected = packed_len(config);
    if bytes.len() != expected {
        return Err(Error::Format(format!(
            "frame is {} bytes, expected {expected} for l={} n={}",
            bytes.len(),
            config.frame_length,
            config.symbol_bits
        )));
    }
    let n = config.symbol_bits as usize;
    let l = config.frame_length as usize;
    let mut encoded = Vec::with_capacity(l);
    let mut bit = 0usize;
    for _ in 0..l {
        let mut symbol = 0u16;
        for _ in 0..n {
            symbol = (symbol << 1) | ((bytes[bit / 8] >> (7 - bit % 8)) & 1) as u16;
            bit += 1;
        }
        encoded.push(symbol);
    }
    while bit % 8 != 0 {
        if (bytes[bit / 8] >> (7 - bit % 8)) & 1 != 0 {
            return Err(Error::Format("nonzero padding bits".into()));
        }
        bit += 1;
    }
    let mut state_bytes = [0u8; 8];
    state_bytes.copy_from_slice(&bytes[bytes.len() - 8..]);
    let r = config.redundancy_bits as u32;
    Ok(Frame {
        payload: encoded.iter().map(|&s| s >> r).collect(),
        encoded,
        final_state: u64::from_le_bytes(state_bytes),
    })
}

/// Flattens symbols to a bit sequence, MSB of each symbol first — the same
/// order the wire format uses, and the order channel noise is applied in.
pub fn symbols_to_bits(symbols: &[u16], symbol_bits: u8) -> Vec<bool> {
    let mut bits = Vec::with_capacity(symbols.len() * symbol_bits as usize);
    for &symbol in symbols {
        for i in (0..symbol_bits).rev() {
            bits.push((symbol >> i) & 1 == 1);
        }
    }
    bits
}

/// Inverse of [`symbols_to_bits`]; `bits.len()` must be a multiple of
/// `symbol_bits`.
pub fn bits_to_symbols(bits: &[bool], symbol_bits: u8) -> Vec<u16> {
    debug_assert_eq!(bits.len() % symbol_bits as usize, 0);
    bits.chunks(symbol_bits as usize)
        .map(|chunk| chunk.iter().fold(0u16, |acc, &b| (acc << 1) | b as u16))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(n: u8, r: u8, l: u32, seed: u64) -> (CodeConfig, TransitionTable) {
        let config = CodeConfig::new(n, r, seed, l, 0.05, 1 << 20).unwrap();
        let table = TransitionTable::generate(&config).unwrap();
        (config, table)
    }

    #[test]
    fn encode_is_deterministic() {
        let (config, table) = setup(8, 4, 8, 77);
        let payload = [1u16, 2, 3, 4, 5, 6, 7, 8];
        let a = encode_frame(&payload, &config, &table).unwrap();
        let b = encode_frame(&payload, &config, &table).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn encode_rejects_out_of_range_payload() {
        let (config, table) = setup(8, 4, 2, 77);
        let err = encode_frame(&[0, 16], &config, &table).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
        let err = encode_frame(&[0], &config, &table).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn golden_zero_payload_frame() {
        // Frozen from the independent straight-line oracle
        // (tests/data/encode_frame.json): n=8, R=4, seed=42, payload 0,0,0,0.
        let (config, table) = setup(8, 4, 4, 42);
        let frame = encode_frame(&[0, 0, 0, 0], &config, &table).unwrap();
        assert_eq!(frame.encoded, vec![5, 5, 2, 2]);
        assert_eq!(frame.final_state, 0x2973_c1db_026b_355d);
    }

    #[test]
    fn pack_layout_single_byte_symbol() {
        let (config, _) = setup(8, 4, 1, 1);
        let frame = Frame {
            payload: vec![0xA],
            encoded: vec![0xAB],
            final_state: 0,
        };
        let bytes = pack_frame(&frame, &config);
        assert_eq!(bytes, vec![0xAB, 0, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn packed_len_covers_partial_bytes() {
        let (config, _) = setup(9, 6, 3, 1);
        // 27 symbol bits -> 4 bytes, plus 8 state bytes.
        assert_eq!(packed_len(&config), 12);
    }

    #[test]
    fn unpack_rejects_bad_length_and_padding() {
        let (config, table) = setup(9, 6, 3, 1);
        let frame = encode_frame(&[0, 1, 2], &config, &table).unwrap();
        let bytes = pack_frame(&frame, &config);
        assert!(matches!(
            unpack_frame(&bytes[1..], &config),
            Err(Error::Format(_))
        ));
        let mut corrupt = bytes.clone();
        corrupt[3] |= 0x01; // inside the 5 padding bits
        assert!(matches!(
            unpack_frame(&corrupt, &config),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn backward_replay_reproduces_forward_states() {
        let (config, table) = setup(8, 4, 64, 5);
        let payload: Vec<u16> = (0..64).map(|i| (i * 7 + 3) as u16 & 15).collect();
        let frame = encode_frame(&payload, &config, &table).unwrap();

        let mut forward_states = vec![config.initial_state()];
        for &symbol in &frame.encoded {
            let (next, check) = table.step_forward(*forward_states.last().unwrap(), symbol);
            assert!(check, "clean path must pass every check");
            forward_states.push(next);
        }
        assert_eq!(*forward_states.last().unwrap(), frame.final_state);

        let mut state = frame.final_state;
        for (i, &symbol) in frame.encoded.iter().enumerate().rev() {
            let (prev, check) = table.step_backward(state, symbol);
            assert!(check);
            state = prev;
            assert_eq!(state, forward_states[i]);
        }
    }
}
