// Mirror of the server's token-counting rule so the editor can show a live
// count against the gate budget: each CJK ideograph is one token, each
// maximal run of other letters/digits/apostrophes is one token, and every
// remaining non-space character is one token.

const CJK_RANGES: ReadonlyArray<readonly [number, number]> = [
  [0x4e00, 0x9fff],
  [0x3400, 0x4dbf],
  [0xf900, 0xfaff],
  [0x20000, 0x2a6df],
  [0x2a700, 0x2ebef],
  [0x30000, 0x3134f],
];

export function isCjk(codePoint: number): boolean {
  return CJK_RANGES.some(([lo, hi]) => codePoint >= lo && codePoint <= hi);
}

const WORD_CHAR = /[\p{L}\p{N}']/u;
const SPACE = /\s/u;

export function countTokens(text: string): number {
  let count = 0;
  let inWord = false;
  for (const ch of text) {
    const cp = ch.codePointAt(0) ?? 0;
    if (isCjk(cp)) {
      count += 1;
      inWord = false;
    } else if (WORD_CHAR.test(ch)) {
      if (!inWord) {
        count += 1;
        inWord = true;
      }
    } else if (SPACE.test(ch)) {
      inWord = false;
    } else {
      count += 1;
      inWord = false;
    }
  }
  return count;
}
