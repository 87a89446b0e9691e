//! Generator matrices for the three 15-dimensional algebras found by random
//! search. Row `i` bit `14 - j` is entry `(i, j)`.

pub(crate) const L_15_9: [[u16; 15]; 2] = [
    [
        0b000101010001001,
        0b001110110010111,
        0b011011100100011,
        0b001001010010000,
        0b000100010001010,
        0b000111110001000,
        0b000010100111000,
        0b000001101001100,
        0b000000110111011,
        0b000000101000100,
        0b000000111010010,
        0b000001100010100,
        0b000000111011111,
        0b000000010000111,
        0b000000000011110,
    ],
    [
        0b000000101010011,
        0b001001001100001,
        0b100010111111001,
        0b000001100110111,
        0b001100101101111,
        0b000110011111101,
        0b000110010110010,
        0b000010001110000,
        0b000000000111001,
        0b000001100111010,
        0b000001100101101,
        0b000000011100000,
        0b000001100110100,
        0b000000101110101,
        0b000000011011100,
    ],
];

pub(crate) const L_15_10: [[u16; 15]; 2] = [
    [
        0b000000010110111,
        0b001000100010110,
        0b010111010100011,
        0b001010001101010,
        0b000010000011110,
        0b000100000011000,
        0b000011111000101,
        0b000001101100111,
        0b000000001111110,
        0b000000000111000,
        0b000000100000100,
        0b000001111110011,
        0b000000110010000,
        0b000000010001100,
        0b000000000111010,
    ],
    [
        0b000011000110111,
        0b001111001111011,
        0b101110000100011,
        0b001000011010110,
        0b001111000010100,
        0b000111000101010,
        0b000101100010000,
        0b000010010111100,
        0b000001001110000,
        0b000000101110100,
        0b000001000010110,
        0b000000000000100,
        0b000001110010100,
        0b000000110011100,
        0b000000011110111,
    ],
];

pub(crate) const L_15_11: [[u16; 15]; 2] = [
    [
        0b011101110110110,
        0b010110011010010,
        0b011101101011100,
        0b001110110100111,
        0b000101011000100,
        0b000111001010000,
        0b000011000000110,
        0b000000001010000,
        0b000001011010101,
        0b000001100101110,
        0b000001110011100,
        0b000001010010000,
        0b000000110111110,
        0b000000010110010,
        0b000000001001101,
    ],
    [
        0b101010000101011,
        0b101101110110010,
        0b101010110101000,
        0b000111011110110,
        0b001001110001100,
        0b000110111101101,
        0b000110100001110,
        0b000011010011010,
        0b000000101001011,
        0b000000101011110,
        0b000000111011001,
        0b000001110111101,
        0b000001110110010,
        0b000000101100001,
        0b000000011101010,
    ],
];
