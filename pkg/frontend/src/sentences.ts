// Sentence bounds must agree with the backend segmenter on ordinary prose:
// terminal punctuation ends a sentence, a colon before a capitalized word
// does too, and common abbreviations do not.

const ABBREVIATIONS = new Set([
  "z. B.", "u. a.", "d. h.", "bzw.", "ca.", "etc.", "evtl.", "ggf.",
  "inkl.", "Dr.", "Prof.", "Nr.", "Str.", "usw.", "vgl.",
]);

function endsWithAbbreviation(left: string): boolean {
  for (const abbr of ABBREVIATIONS) {
    if (left.endsWith(abbr)) return true;
  }
  // single-letter initials and abbreviation parts like "A." or "z."
  return /(^|\s)\p{L}\.$/u.test(left);
}

/** Positions where a new sentence starts (0 is always included). */
export function sentenceStarts(text: string): number[] {
  const starts = [0];
  const re = /[.!?]+\s+|:\s+(?=\p{Lu})/gu;
  let m: RegExpExecArray | null;
  while ((m = re.exec(text)) !== null) {
    const end = m.index + m[0].length;
    if (m[0].startsWith(".") && endsWithAbbreviation(text.slice(0, m.index + 1))) {
      continue;
    }
    if (end < text.length) starts.push(end);
  }
  return starts;
}

/** [start, end) of the sentence containing the given span. */
export function sentenceBounds(text: string, span: [number, number]): [number, number] {
  const starts = sentenceStarts(text);
  let start = 0;
  for (const s of starts) {
    if (s <= span[0]) start = s;
  }
  const next = starts.find((s) => s > start);
  let end = next === undefined ? text.length : next;
  while (end > start && /\s/.test(text[end - 1] as string)) end -= 1;
  return [start, end];
}
