#!/usr/bin/env python3
"""Generate tests/fixtures/clip_tokenizer_reference.jsonl.

Runs the reference CLIP SimpleTokenizer algorithm (ftfy + html unescape +
whitespace collapse + lowercase, regex pre-tokenization, ranked BPE) over a
fixed corpus and writes one {"text", "ids"} record per line. Content ids only:
no start/end tokens. Requires: ftfy, regex.
"""
import argparse
import gzip
import html
import json

import ftfy
import regex as re

CORPUS = [
    "",
    "hello world",
    "HELLO",
    "hello",
    "The River Nore at Kilkenny",
    "Phahurat Road",
    "Phahurat or Pahurat sometimes described as Thailand's Little India",
    "A constitutional court is a high court that deals primarily with constitutional law.",
    "Davenport is a city in and the county seat of Scott County, Iowa, United States.",
    "Credit Island, Davenport, Iowa",
    "Phra Nakhon district, Bangkok",
    "Wat Pho (Temple of the Reclining Buddha), officially Wat Phra Chetuphon Wimon Mangkhalaram",
    "Caption: The River Nore at Kilkenny\n\nNote: The River Nore flows through Kilkenny.",
    "SummaryStart: The summary of the text is as follows. <SummaryEnd>",
    "Please generate a summary so that there are 180 tokens.",
    "The current tokens are still 210 tokens.",
    "  leading and trailing   whitespace\t\tcollapsed \n\n ",
    "multiple\nlines\r\nwith\rcarriage returns",
    "don't won't can't I'm you're we've they'll he'd it's",
    "DON'T WON'T I'M YOU'RE",
    "numbers 1234567890 and 3.14159 and 2,500 instances",
    "Avg. token length 26.48; # of instances 2,500",
    "year 1887, 19th-century, 21st century",
    "punctuation!!! ??? ... --- ;;; ::: ,,, (((brackets)))",
    "emails: someone@example.com and urls https://en.wikipedia.org/wiki/Phahurat",
    "hashtags #flux #sd3 @mentions",
    "mixed123letters456and789digits",
    "CamelCaseWordsAreSplitByCaseOnlyAfterLowering",
    "snake_case_identifier_with_underscores",
    "kebab-case-words-with-hyphens",
    "a",
    "I",
    ".",
    "!",
    "supercalifragilisticexpialidocious",
    "pneumonoultramicroscopicsilicovolcanoconiosis",
    "Café au lait, naïve résumé, façade, jalapeño",
    "ÉCOLE NORMALE SUPÉRIEURE",
    "Zürich, München, Köln, Düsseldorf",
    "Øresund Bridge between København and Malmö",
    "Ångström, Ærøskøbing",
    "São Paulo, Ceará, Maranhão",
    "Kraków, Łódź, Gdańsk, Wrocław",
    "Αθήνα (Athens) is the capital of Greece",
    "ΟΔΟΣ ΕΡΜΟΥ ΑΘΗΝΑΣ, ΣΥΝΤΑΓΜΑ",
    "Москва — столица России",
    "МОСКВА КРЕМЛЬ",
    "東京タワー (Tokyo Tower)",
    "北京故宫博物院",
    "서울특별시 Seoul",
    "ภูเขาทอง Golden Mount in Bangkok",
    "मुंबई Mumbai",
    "القاهرة Cairo",
    "emoji 🙂 🚀 🏛️ at the end",
    "arrows → ← ↑ ↓ and math ∑ √ ∞ ≤ ≥",
    "currency $100 €200 £300 ¥400",
    "temperature 25°C and 77°F",
    "fractions ½ ¼ ¾ and superscripts x² y³",
    "roman numerals Ⅷ Ⅻ",
    "fish &amp; chips",
    "&lt;tag&gt; &quot;quoted&quot; &#39;single&#39;",
    "double escaped &amp;amp; entity",
    "“curly double quotes” and ‘curly single quotes’",
    "it’s a smart apostrophe",
    "em dash — en dash – hyphen -",
    "ellipsis… and bullet • points",
    "tab\tseparated\tvalues",
    "The Eiffel Tower at night, Paris, France",
    "St. Mary's Cathedral, Kilkenny",
    "Mount Fuji seen from Lake Kawaguchi in autumn",
    "A red double-decker bus on Westminster Bridge",
    "The Golden Gate Bridge shrouded in fog",
    "Statue of Liberty, Liberty Island, New York Harbor",
    "Sagrada Família, designed by Antoni Gaudí",
    "The Taj Mahal reflected in the pool at sunrise",
    "Neuschwanstein Castle in the Bavarian Alps",
    "Angkor Wat temple complex, Siem Reap, Cambodia",
    "Machu Picchu, 15th-century Inca citadel",
    "Victoria Falls on the Zambezi River",
    "Hagia Sophia, Istanbul",
    "The Great Wall of China near Mutianyu",
    "Sydney Opera House and Harbour Bridge",
    "Petra's Al-Khazneh treasury",
    "Chichén Itzá, Yucatán",
    "A view of the Rhine at Köln-Deutz",
    "The Shard, London Bridge Quarter",
    "Lake Bled with the island church of the Assumption of Mary",
    "Bran Castle (Castelul Bran), Transylvania",
    "Plaça de Catalunya, Barcelona",
    "<|startoftext|> not special when lowered? <|endoftext|>",
    "repeated repeated repeated repeated repeated",
    "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa",
    "zzzzzzzzzz qqqqqqqqqq xxxxxxxxxx",
    "The 2,500-instance dataset averages 3.02 entities per caption.",
    "guidance scale 3.5, 50 inference steps, 1024x1024 pixels, seed 42",
    "TextTIGER, Iterative-TextTIGER, Cap-Only, Cap-Aug-Only",
    "Llama3.1 8B-Instruct, Qwen2.5 72B-Instruct, gpt-4o-mini-2024-07-18",
    "FLUX.1-dev and stable-diffusion-3.5-large",
    "ﬁnal ﬂow ligatures",
    "ＦＵＬＬＷＩＤＴＨ ｌｅｔｔｅｒｓ",
]


def bytes_to_unicode():
    bs = list(range(ord("!"), ord("~") + 1)) + list(range(ord("¡"), ord("¬") + 1)) + list(range(ord("®"), ord("ÿ") + 1))
    cs = bs[:]
    n = 0
    for b in range(256):
        if b not in bs:
            bs.append(b)
            cs.append(256 + n)
            n += 1
    return dict(zip(bs, [chr(c) for c in cs]))


def get_pairs(word):
    return {(a, b) for a, b in zip(word, word[1:])}


class ReferenceTokenizer:
    def __init__(self, bpe_path):
        self.byte_encoder = bytes_to_unicode()
        merges = gzip.open(bpe_path).read().decode("utf-8").split("\n")
        merges = [tuple(m.split()) for m in merges[1:49152 - 256 - 2 + 1]]
        vocab = list(bytes_to_unicode().values())
        vocab = vocab + [v + "</w>" for v in vocab]
        vocab.extend("".join(m) for m in merges)
        vocab.extend(["<|startoftext|>", "<|endoftext|>"])
        self.encoder = dict(zip(vocab, range(len(vocab))))
        self.bpe_ranks = dict(zip(merges, range(len(merges))))
        self.cache = {"<|startoftext|>": "<|startoftext|>", "<|endoftext|>": "<|endoftext|>"}
        self.pat = re.compile(
            r"""<\|startoftext\|>|<\|endoftext\|>|'s|'t|'re|'ve|'m|'ll|'d|[\p{L}]+|[\p{N}]|[^\s\p{L}\p{N}]+""",
            re.IGNORECASE,
        )

    def bpe(self, token):
        if token in self.cache:
            return self.cache[token]
        word = tuple(token[:-1]) + (token[-1] + "</w>",)
        pairs = get_pairs(word)
        if not pairs:
            return token + "</w>"
        while True:
            bigram = min(pairs, key=lambda p: self.bpe_ranks.get(p, float("inf")))
            if bigram not in self.bpe_ranks:
                break
            first, second = bigram
            new_word = []
            i = 0
            while i < len(word):
                try:
                    j = word.index(first, i)
                    new_word.extend(word[i:j])
                    i = j
                except ValueError:
                    new_word.extend(word[i:])
                    break
                if word[i] == first and i < len(word) - 1 and word[i + 1] == second:
                    new_word.append(first + second)
                    i += 2
                else:
                    new_word.append(word[i])
                    i += 1
            word = tuple(new_word)
            if len(word) == 1:
                break
            pairs = get_pairs(word)
        word = " ".join(word)
        self.cache[token] = word
        return word

    def encode(self, text):
        text = ftfy.fix_text(text)
        text = html.unescape(html.unescape(text)).strip()
        text = " ".join(text.split()).strip().lower()
        ids = []
        for token in re.findall(self.pat, text):
            token = "".join(self.byte_encoder[b] for b in token.encode("utf-8"))
            ids.extend(self.encoder[t] for t in self.bpe(token).split(" "))
        return ids


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("bpe_gz")
    ap.add_argument("out")
    args = ap.parse_args()
    assert len(CORPUS) == 100, len(CORPUS)
    assert len(set(CORPUS)) == len(CORPUS)
    tok = ReferenceTokenizer(args.bpe_gz)
    with open(args.out, "w", encoding="utf-8") as f:
        for text in CORPUS:
            f.write(json.dumps({"text": text, "ids": tok.encode(text)}, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
