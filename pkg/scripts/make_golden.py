"""Generate tests/data/isri_golden.csv from NLTK's ISRI stemmer.

Run once with NLTK importable (it is not a dependency of the package):

    PYTHONPATH=/path/to/nltk python scripts/make_golden.py
"""

from __future__ import annotations

import csv
import random
from pathlib import Path

from nltk.stem.isri import ISRIStemmer

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "isri_golden.csv"

ROOTS = [
    "قتل", "جهد", "شهد", "عرك", "حرب", "قصف", "فجر", "فتح", "خلف", "حسب",
    "حمد", "دين", "كبر", "وحد", "رحم", "رسل", "ولي", "شرع", "سور", "رفض",
    "صفي", "كفر", "رتد", "غرب", "عمر", "عرب", "كتب", "سلم", "علم", "درس",
    "نصر", "خرج", "دخل", "قول", "بيع", "سأل", "أمر", "أخذ", "قرأ", "هدم",
    "طلب", "ضرب", "حكم", "جمع", "صبر", "زند", "حزم", "عصف", "ذبح", "سجن",
    "حذف", "شيخ", "دعش",
]

# f/e/l mark the three root consonants
PATTERNS = [
    "فعل", "فاعل", "مفعول", "فعال", "فعيل", "فعول", "مفعل", "فعلة", "مفعلة",
    "افتعل", "افتعال", "تفاعل", "مفاعل", "انفعل", "منفعل", "استفعل",
    "استفعال", "مستفعل", "تفعيل", "فعالة", "فعولة", "افعال", "فعلان",
    "فاعول", "فواعل", "فعائل", "فاعلة", "فعالي", "يفتعل", "تفتعل", "مفتعل",
    "افعوعل", "تفاعيل", "مفعالة", "يفعل", "تفعل", "نفعل", "فعلوا",
]

PREFIXES = ["", "", "", "ال", "وال", "بال", "كال", "لل", "ولل", "و", "ف", "ب", "ل", "س"]
SUFFIXES = [
    "", "", "", "ة", "ات", "ون", "ين", "ان", "ها", "هم", "هن", "نا", "كم",
    "تين", "تان", "ي", "ه", "ك", "ت", "ا", "ن", "يا", "ني", "وا", "ما",
]

DIACRITICS = "ًٌٍَُِّْ"

SAMPLE_TWEETS = """
الشعب العربي انقسم إلى قسمين قسم أكل الصدا رأسه وهو يصدق هرطقات الاعلام وعلماء التلفاز والقسم الاخر بدأ يبحث بنفسه ليتبين له الحق
الوقائع على الارض تؤكد ان بشار الاسد يتراجع على كل الجبهات وهزيمته أصبحت واضحة جدا بعدها ينتقل الصراع اللاذقية ومن
هذا هم المسلمين يجاهدون الشيعة بالعراق وحكامك يدعمون الشيعة عليهم وش الفرق بين الحوثي الرافضي والعراقي الرافضي
سنضرب أي حسيونة من لا يعرف أن المناطق الشرقية في السعودية هي عقر دار روافض جزيرة العرب لا يحق له أن يكون محلل إعلامي
وليعلم العالم ليس معنى أنه دخل الكعبة فهو ليس بزندق قد كسر الصنم هذه صفة لكل من يعتقد إن خائن الحرمين ولي أمر ولا يجوز الخروج عليه
قال عليه الصلاة والسلام من لزم الاستغفار جعل الله له من كل هم فرجاً ومن كل ضيق مخرجاً ورزقه من حيث لا يحتسب
من الضروري جدا فتح كافة الجبهات في كافة المحافظات المنتقضة و ذلك للتخفيف على الرمادي واقضيبتها الثائرة ولتشتيت قوات نوري العميل
نرف لكم نبأ استشهاده الأخ المهاجر أبو أنس روقة جندي من جنود الدولة الإسلامية وذلك في معارك شرق ولاية الرقة
"""

EXTRA = [
    "المسلمين", "والقتال", "يكتبون", "خلافات", "قَتَلَ", "أسد", "الجهاد",
    "استشهاد", "الخلافة", "اخبار", "عاصفة", "الحزم", "داعش", "الرافضة",
    "الصفوية", "الكفار", "المرتدين", "الشريعة", "الرسول", "التوحيد", "الدين",
    "الحمد", "المجاهدين", "الحرب", "القصف", "تفجير", "الفتح", "يكون", "وكان",
    "الذي", "التي", "ووعد", "وولد", "إسلام", "آمن", "أحمد", "إيمان", "مسألة",
    "في", "من", "أن", "علي", "إلي", "عن", "لا", "ما", "هذا", "هذه", "كان",
    "مع", "و", "ذلك", "بين", "لم", "بعد", "كل", "2014", "١٤٣٥", "ب", "اب",
    "دولة", "الاسلامية", "الإسلامية", "جهادي", "جهادا", "الشيخ", "مشايخ", "داعشي",
    "الأسد", "أسود", "الغرب", "عمر", "العرب",
]


def build_root(pattern: str, root: str) -> str:
    out = []
    for ch in pattern:
        out.append({"ف": root[0], "ع": root[1], "ل": root[2]}.get(ch, ch))
    return "".join(out)


def vocabulary(n_random: int = 1400, seed: int = 20170125) -> list[str]:
    words: list[str] = []
    for line in SAMPLE_TWEETS.strip().splitlines():
        words.extend(line.split())
    words.extend(EXTRA)
    for root in ROOTS:
        for pattern in PATTERNS:
            words.append(build_root(pattern, root))
    rng = random.Random(seed)
    for _ in range(n_random):
        word = build_root(rng.choice(PATTERNS), rng.choice(ROOTS))
        word = rng.choice(PREFIXES) + word + rng.choice(SUFFIXES)
        if rng.random() < 0.1:
            pos = rng.randrange(1, len(word) + 1)
            word = word[:pos] + rng.choice(DIACRITICS) + word[pos:]
        words.append(word)
    seen: set[str] = set()
    unique = []
    for word in words:
        if word not in seen:
            seen.add(word)
            unique.append(word)
    return unique


def main() -> None:
    stemmer = ISRIStemmer()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["word", "expected_stem"])
        for word in vocabulary():
            writer.writerow([word, stemmer.stem(word)])


if __name__ == "__main__":
    main()
