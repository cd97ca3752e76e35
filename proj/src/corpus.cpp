/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "piiguard/errors.hpp"
#include "piiguard/text.hpp"
#include "piiguard/validators.hpp"

namespace piiguard {
namespace {

// SplitMix64. Fixed algorithm, not std::mt19937, so a (seed, spec) pair
// yields byte-identical corpora on every platform and standard library.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  char digit(int lo, int hi) {
    return static_cast<char>('0' + lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))));
  }
  bool chance(int pct) { return below(100) < static_cast<std::size_t>(pct); }
};

const char* pick(Rng& rng, const std::vector<const char*>& bank) {
  return bank[rng.below(bank.size())];
}

// Carrier sentence with one slot; record text = pre + surface + post.
struct Tpl {
  const char* pre;
  const char* post;
};

// Per-locale sentence banks. Surfaces and anchor words are drawn from the
// same lexicons the bundled detectors ship, so gold spans line up with what
// the pipeline can actually see. Filler sentences contain nothing detectable:
// no digits, no month names, no lexicon names or cities, no honorifics.
struct LocaleBank {
  std::vector<const char*> fillers;
  std::vector<Tpl> email, phone, card, nid, bank, date, year, person, honorific_person,
      location, credential;
  std::vector<const char*> first_names, surnames, locations, months, email_locals;
};

const LocaleBank& bank_for(const std::string& locale) {
  static const std::map<std::string, LocaleBank> banks = [] {
    std::map<std::string, LocaleBank> m;

    LocaleBank en;
    en.fillers = {"The rollout plan was reviewed by the platform team.",
                  "Weekly sync notes cover the migration checklist.",
                  "All integration checks passed without warnings."};
    en.email = {{"You can reach the auditor at ", " for follow-up."},
                {"Send the signed form to ", " by end of week."}};
    en.phone = {{"You can phone the desk at ", " during office hours."},
                {"The on-call phone is ", " this week."}};
    en.card = {{"The card on file is ", " for renewals."},
               {"Billing goes to card ", " this quarter."}};
    en.nid = {{"The SSN on record is ", " for the applicant."},
              {"Payroll lists social security number ", " in the file."}};
    en.date = {{"The deadline is ", " for submissions."},
               {"The audit happened on ", " as planned."}};
    en.year = {{"Archive records from ", " were digitized."}};
    en.person = {{"Please loop in ", " before the demo."},
                 {"The report was drafted by ", " last week."}};
    en.honorific_person = {{"Please forward the summary to Mr. ", " today."},
                           {"The request came from Ms. ", " this morning."}};
    en.location = {{"The venue moved to ", " for the meeting."},
                   {"The workshop takes place in ", " next month."}};
    en.credential = {{"Rotate the leaked token ", " immediately."},
                     {"The CI secret ", " must be revoked."}};
    en.first_names = {"Alice", "John",  "Emily", "Liam",  "Olivia", "Grace",
                      "Daniel", "Laura", "Kevin", "Rachel", "Sarah",  "Thomas"};
    en.surnames = {"Green", "Carter", "Bennett", "Walsh", "Harper",
                   "Collins", "Brooks", "Reed", "Hayes"};
    en.locations = {"New York", "London", "Boston", "Chicago", "Seattle",
                    "Toronto", "Dublin", "San Francisco"};
    en.months = {"January", "February", "March",   "April",   "May",      "June",
                 "July",    "August",   "September", "October", "November", "December"};
    en.email_locals = {"alice", "john", "emily", "liam", "sarah", "kevin"};
    m["en"] = std::move(en);

    LocaleBank de;
    de.fillers = {"Das Deployment wurde vom Plattformteam geprüft.",
                  "Die wöchentliche Abstimmung behandelte die Checkliste.",
                  "Alle Integrationstests liefen ohne Warnungen durch."};
    de.email = {{"Bitte senden Sie die Unterlagen an ", " bis Ende der Woche."},
                {"Rückfragen gehen an ", " laut Verteiler."}};
    de.phone = {{"Telefon: ", " für die Zentrale."},
                {"Die Rufnummer lautet ", " für Rückfragen."}};
    de.card = {{"Die Kreditkarte ", " ist hinterlegt."},
               {"Die Zahlung läuft über die Kreditkarte ", " wie vereinbart."}};
    de.nid = {{"Die Steuer-ID ", " wurde übermittelt."},
              {"Im Formular steht die Steuer-ID ", " des Antragstellers."}};
    de.bank = {{"Die IBAN ", " gehört zum Geschäftskonto."},
               {"Überweisungen gehen an die IBAN ", " ab sofort."}};
    de.date = {{"Die Frist endet am ", " um Mitternacht."},
               {"Die Prüfung fand am ", " statt."}};
    de.year = {{"Unterlagen aus ", " wurden digitalisiert."}};
    de.person = {{"Der Bericht stammt von ", " und ist final."},
                 {"Die Anfrage kam von ", " am Morgen."}};
    de.honorific_person = {{"Herr ", " hat die Änderung freigegeben."},
                           {"Frau ", " leitet die Abnahme."}};
    de.location = {{"Die Veranstaltung findet in ", " statt."},
                   {"Das Treffen wurde nach ", " verlegt."}};
    de.first_names = {"Anna", "Hans", "Greta", "Klaus", "Ingrid", "Stefan",
                      "Monika", "Lukas", "Johanna", "Markus", "Katrin", "Jonas"};
    de.surnames = {"Weber", "Schneider", "Fischer", "Wagner", "Becker", "Hoffmann"};
    de.locations = {"Berlin", "München", "Hamburg", "Frankfurt", "Köln", "Wien"};
    de.months = {"Januar", "Februar", "März",      "April",   "Mai",      "Juni",
                 "Juli",   "August",  "September", "Oktober", "November", "Dezember"};
    de.email_locals = {"anna", "hans", "greta", "stefan", "monika", "lukas"};
    m["de"] = std::move(de);

    LocaleBank fr;
    fr.fillers = {"Le plan de déploiement a été validé par l'équipe.",
                  "La revue hebdomadaire portait sur la liste de contrôle.",
                  "Les tests d'intégration se sont déroulés sans alerte."};
    fr.email = {{"Envoyez le dossier à ", " avant vendredi."},
                {"Le contact de facturation est ", " pour ce trimestre."}};
    fr.phone = {{"Le numéro de téléphone est ", " en journée."},
                {"Le téléphone du bureau est ", " en semaine."}};
    fr.card = {{"La carte ", " est enregistrée au dossier."},
               {"Le paiement passe par la carte ", " ce mois-ci."}};
    fr.bank = {{"L'IBAN ", " figure au contrat."},
               {"Le virement part vers l'IBAN ", " demain."}};
    fr.date = {{"L'audit a eu lieu le ", " au matin."},
               {"La date limite est le ", " pour les dossiers."}};
    fr.year = {{"Les archives de ", " ont été numérisées."}};
    fr.person = {{"Le dossier a été préparé par ", " hier soir."},
                 {"La note vient de ", " ce matin."}};
    fr.honorific_person = {{"Mme ", " a signé le compte rendu."},
                           {"M. ", " valide la livraison."}};
    fr.location = {{"La réunion aura lieu à ", " le même jour."},
                   {"L'atelier se tiendra à ", " au printemps."}};
    fr.first_names = {"Pierre", "Marie", "Sophie", "Luc", "Hugo", "Antoine",
                      "Mathieu", "Nicolas", "Louis", "Julien", "Céline", "Isabelle"};
    fr.surnames = {"Dubois", "Moreau", "Lefevre", "Garnier"};
    fr.locations = {"Paris", "Lyon", "Marseille", "Toulouse", "Bordeaux"};
    fr.months = {"janvier", "février", "mars",      "avril",   "mai",      "juin",
                 "juillet", "août",    "septembre", "octobre", "novembre", "décembre"};
    fr.email_locals = {"pierre", "marie", "sophie", "antoine", "nicolas", "celine"};
    m["fr"] = std::move(fr);

    LocaleBank es;
    es.fillers = {"El plan de despliegue fue revisado por el equipo.",
                  "La revisión semanal cubrió la lista de verificación.",
                  "Las pruebas de integración pasaron sin avisos."};
    es.email = {{"Envíe el resumen a ", " cuando pueda."},
                {"El contacto de soporte es ", " este mes."}};
    es.phone = {{"Su teléfono es ", " según la ficha."},
                {"El teléfono de la oficina es ", " por la mañana."}};
    es.card = {{"La tarjeta ", " está registrada."},
               {"El pago usa la tarjeta ", " cada mes."}};
    es.bank = {{"El IBAN ", " consta en el expediente."},
               {"La transferencia usa el IBAN ", " del proveedor."}};
    es.date = {{"La auditoría ocurrió el ", " por la mañana."},
               {"La fecha límite es el ", " para entregas."}};
    es.year = {{"Los archivos de ", " fueron digitalizados."}};
    es.person = {{"El informe fue preparado por ", " ayer."},
                 {"La solicitud vino de ", " esta semana."}};
    es.honorific_person = {{"La Sra. ", " aprobó el documento."},
                           {"El Sr. ", " coordina la entrega."}};
    es.location = {{"La reunión será en ", " este jueves."},
                   {"El taller se celebrará en ", " más tarde."}};
    es.first_names = {"María", "José", "Carmen", "Antonio", "Lucía", "Manuel",
                      "Sofía", "Diego", "Elena", "Pablo", "Isabel", "Javier"};
    es.surnames = {"Torres", "Navarro", "Vidal", "Serrano"};
    es.locations = {"Madrid", "Barcelona", "Sevilla", "Valencia", "Bilbao"};
    es.months = {"enero", "febrero", "marzo",      "abril",   "mayo",      "junio",
                 "julio", "agosto",  "septiembre", "octubre", "noviembre", "diciembre"};
    es.email_locals = {"maria", "jose", "carmen", "antonio", "lucia", "pablo"};
    m["es"] = std::move(es);

    LocaleBank pt;
    pt.fillers = {"O plano de implantação foi revisto pela equipa.",
                  "A revisão semanal cobriu a lista de verificação.",
                  "Os testes de integração passaram sem avisos."};
    pt.email = {{"Envie o resumo para ", " até sexta."},
                {"O contacto de suporte é ", " este mês."}};
    pt.phone = {{"O telefone de contacto é ", " durante o dia."},
                {"O telefone da equipa é ", " em horário útil."}};
    pt.card = {{"O cartão ", " está registado."},
               {"O pagamento usa o cartão ", " todos os meses."}};
    pt.date = {{"A auditoria ocorreu em ", " de manhã."},
               {"A data limite é ", " para entregas."}};
    pt.year = {{"Os arquivos de ", " foram digitalizados."}};
    pt.person = {{"O relatório foi preparado por ", " ontem."},
                 {"O pedido veio de ", " esta semana."}};
    pt.honorific_person = {{"A Dona ", " aprovou o documento."},
                           {"O Sr. ", " coordena a entrega."}};
    pt.location = {{"A reunião será em ", " esta quinta."},
                   {"O workshop decorrerá em ", " mais tarde."}};
    pt.first_names = {"João", "Ana", "Miguel", "Tiago", "Inês", "Rui",
                      "Catarina", "Pedro", "Mariana", "Nuno", "Teresa", "Diogo"};
    pt.surnames = {"Silva", "Santos", "Ferreira", "Almeida"};
    pt.locations = {"Lisboa", "Porto", "Coimbra", "Braga", "Faro"};
    pt.months = {"janeiro", "fevereiro", "março",    "abril",   "maio",      "junho",
                 "julho",   "agosto",    "setembro", "outubro", "novembro", "dezembro"};
    pt.email_locals = {"joao", "ana", "tiago", "ines", "pedro", "mariana"};
    m["pt"] = std::move(pt);

    LocaleBank hi;
    hi.fillers = {"तैनाती योजना की समीक्षा टीम ने पूरी की।",
                  "साप्ताहिक बैठक में जांच सूची पर चर्चा हुई।",
                  "सभी एकीकरण परीक्षण बिना चेतावनी के पूरे हुए।"};
    hi.email = {{"विवरण ", " पर भेजें।"}, {"संपर्क के लिए ", " पर लिखें।"}};
    hi.phone = {{"संपर्क के लिए फ़ोन ", " पर कॉल करें।"}, {"फ़ोन नंबर ", " दर्ज है।"}};
    hi.card = {{"कार्ड ", " दर्ज है।"}, {"भुगतान कार्ड ", " से होगा।"}};
    hi.nid = {{"आधार संख्या ", " सत्यापित है।"}, {"फॉर्म में आधार ", " दर्ज है।"}};
    hi.date = {{"समीक्षा ", " को होगी।"}, {"अंतिम तिथि ", " है।"}};
    hi.year = {{"वर्ष ", " के अभिलेख सुरक्षित हैं।"}};
    hi.location = {{"बैठक ", " में होगी।"}, {"कार्यशाला ", " में आयोजित होगी।"}};
    hi.locations = {"मुंबई", "दिल्ली", "बेंगलुरु", "कोलकाता", "चेन्नई"};
    hi.months = {"जनवरी", "फ़रवरी", "मार्च",  "अप्रैल",  "मई",   "जून",
                 "जुलाई", "अगस्त",  "सितंबर", "अक्टूबर", "नवंबर", "दिसंबर"};
    hi.email_locals = {"arjun", "priya", "rahul", "kavita", "vikram", "neha"};
    m["hi-IN"] = std::move(hi);

    return m;
  }();
  auto it = banks.find(locale);
  if (it == banks.end())
    throw ConfigError("corpus generator has no sentence bank for locale '" + locale + "'");
  return it->second;
}

// ---- surface builders -------------------------------------------------

// Digit-group starts are kept in [3,9] wherever a group could otherwise be
// read as a year, a 0xx dial prefix, or a [6-9]xx mobile prefix by another
// locale's pattern. Spaced 4-4-4 digit windows are regenerated until they
// fail the Verhoeff check so no spurious checksum-gated candidate survives.
bool spaced_windows_clean(const std::string& digits) {
  if (digits.size() < 12) return true;
  for (std::size_t off = 0; off + 12 <= digits.size(); off += 4)
    if (verhoeff_check(digits.substr(off, 12))) return false;
  return true;
}

std::string group4(const std::string& digits, char sep) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && i % 4 == 0) out += sep;
    out += digits[i];
  }
  return out;
}

std::string card_surface(Rng& rng) {
  std::string d;
  do {
    d = "4";
    for (int i = 1; i < 15; ++i)
      d += (i % 4 == 0) ? rng.digit(3, 9) : rng.digit(0, 9);
    d += luhn_check_digit(d);
  } while (!spaced_windows_clean(d));
  std::size_t v = rng.below(10);
  if (v < 5) return group4(d, ' ');
  if (v < 8) return group4(d, '-');
  return d;
}

std::string broken_card_surface(Rng& rng) {
  std::string d;
  do {
    d = "4";
    for (int i = 1; i < 15; ++i)
      d += (i % 4 == 0) ? rng.digit(3, 9) : rng.digit(0, 9);
    d += luhn_check_digit(d);
    d.back() = static_cast<char>('0' + (d.back() - '0' + 1) % 10);
  } while (!spaced_windows_clean(d));
  return rng.chance(50) ? group4(d, ' ') : group4(d, '-');
}

std::string aadhaar_digits(Rng& rng) {
  std::string d;
  d += rng.digit(3, 9);
  for (int i = 1; i < 11; ++i)
    d += (i % 4 == 0) ? rng.digit(3, 9) : rng.digit(0, 9);
  d += verhoeff_check_digit(d);
  return d;
}

std::string aadhaar_surface(Rng& rng) {
  std::string d = aadhaar_digits(rng);
  std::size_t v = rng.below(10);
  if (v < 5) return group4(d, ' ');
  if (v < 8) return group4(d, '-');
  return d;
}

std::string ssn_surface(Rng& rng) {
  int area = 100 + static_cast<int>(rng.below(800));
  if (area == 666) area = 667;
  int group = 1 + static_cast<int>(rng.below(99));
  int serial = 1 + static_cast<int>(rng.below(9999));
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d-%02d-%04d", area, group, serial);
  return buf;
}

std::string steuer_digits(Rng& rng) {
  std::string d;
  d += rng.digit(1, 9);
  d += rng.digit(0, 9);
  for (int g = 0; g < 3; ++g) {
    d += rng.digit(3, 5);
    d += rng.digit(0, 9);
    if (g < 2) d += rng.digit(0, 9);
  }
  d += steuer_id_check_digit(d);
  return d;
}

std::string steuer_surface(Rng& rng, bool valid) {
  std::string d = steuer_digits(rng);
  if (!valid) d.back() = static_cast<char>('0' + (d.back() - '0' + 1) % 10);
  if (rng.chance(30)) return d;
  return d.substr(0, 2) + " " + d.substr(2, 3) + " " + d.substr(5, 3) + " " + d.substr(8, 3);
}

std::string nid_surface(Rng& rng, const std::string& locale) {
  if (locale == "en") return ssn_surface(rng);
  if (locale == "de") return steuer_surface(rng, true);
  if (locale == "hi-IN") return aadhaar_surface(rng);
  throw ConfigError("corpus generator has no national id shape for locale '" + locale + "'");
}

// IBAN check digits are real mod-97 values; the surrounding pattern does not
// verify them, but round-tripping realistic values keeps the fixture honest.
std::string iban_check_digits(const std::string& country, const std::string& bban) {
  std::string digits;
  auto push = [&digits](char c) {
    if (c >= '0' && c <= '9') {
      digits += c;
    } else {
      digits += std::to_string(c - 'A' + 10);
    }
  };
  for (char c : bban) push(c);
  for (char c : country) push(c);
  digits += "00";
  int rem = 0;
  for (char c : digits) rem = (rem * 10 + (c - '0')) % 97;
  char buf[4];
  std::snprintf(buf, sizeof buf, "%02d", 98 - rem);
  return buf;
}

std::string iban_surface(Rng& rng, const std::string& locale) {
  std::size_t bban_len;
  std::string country;
  if (locale == "de") {
    country = "DE";
    bban_len = 18;
  } else if (locale == "fr") {
    country = "FR";
    bban_len = 23;
  } else if (locale == "es") {
    country = "ES";
    bban_len = 20;
  } else {
    throw ConfigError("corpus generator has no bank account shape for locale '" + locale + "'");
  }
  std::string full;
  do {
    std::string bban;
    for (std::size_t i = 0; i < bban_len; ++i)
      bban += (i % 4 == 0) ? rng.digit(3, 9) : rng.digit(0, 9);
    full = country + iban_check_digits(country, bban) + bban;
  } while (!spaced_windows_clean(full.substr(4)));
  if (rng.chance(30)) return full;
  return group4(full, ' ');
}

std::string phone_surface(Rng& rng, const std::string& locale) {
  char buf[40];
  auto d = [&rng](int lo, int hi) { return rng.digit(lo, hi); };
  if (locale == "en") {
    char a1 = d(2, 9), a2 = d(0, 9), a3 = d(0, 9);
    char b1 = d(2, 9), b2 = d(0, 9), b3 = d(0, 9);
    char c1 = d(0, 9), c2 = d(0, 9), c3 = d(0, 9), c4 = d(0, 9);
    std::size_t v = rng.below(3);
    const char* fmt = v == 0 ? "(%c%c%c) %c%c%c-%c%c%c%c"
                     : v == 1 ? "%c%c%c-%c%c%c-%c%c%c%c"
                              : "%c%c%c.%c%c%c.%c%c%c%c";
    std::snprintf(buf, sizeof buf, fmt, a1, a2, a3, b1, b2, b3, c1, c2, c3, c4);
    return buf;
  }
  if (locale == "de") {
    static const std::vector<const char*> areas = {"30", "40", "69", "89", "711", "221"};
    std::string area = areas[rng.below(areas.size())];
    std::string local;
    local += d(3, 9);
    std::size_t v = rng.below(3);
    if (v == 2) {
      for (int i = 0; i < 3; ++i) local += d(0, 9);
      local += ' ';
      local += d(3, 9);
      for (int i = 0; i < 3; ++i) local += d(0, 9);
    } else {
      for (int i = 0; i < 6; ++i) local += d(0, 9);
    }
    return "0" + area + (v == 1 ? "/" : " ") + local;
  }
  if (locale == "fr") {
    char p[10];
    p[0] = '0';
    p[1] = d(1, 9);
    for (int i = 2; i < 10; ++i) p[i] = d(0, 9);
    std::size_t v = rng.below(3);
    if (v == 2) {
      std::snprintf(buf, sizeof buf, "+33 %c%c%c %c%c%c %c%c%c", p[1], p[2], p[3], p[4],
                    p[5], p[6], p[7], p[8], p[9]);
      return buf;
    }
    char sep = v == 1 ? '.' : ' ';
    std::snprintf(buf, sizeof buf, "%c%c%c%c%c%c%c%c%c%c%c%c%c%c", p[0], p[1], sep, p[2],
                  p[3], sep, p[4], p[5], sep, p[6], p[7], sep, p[8], p[9]);
    return buf;
  }
  if (locale == "es" || locale == "pt") {
    char p[9];
    p[0] = locale == "pt" ? '9' : d(6, 9);
    for (int i = 1; i < 9; ++i) p[i] = d(0, 9);
    bool intl = rng.chance(25);
    std::snprintf(buf, sizeof buf, "%s%c%c%c %c%c%c %c%c%c",
                  intl ? (locale == "pt" ? "+351 " : "+34 ") : "", p[0], p[1], p[2], p[3],
                  p[4], p[5], p[6], p[7], p[8]);
    return buf;
  }
  if (locale == "hi-IN") {
    char p[10];
    p[0] = d(6, 9);
    for (int i = 1; i < 10; ++i) p[i] = d(0, 9);
    std::size_t v = rng.below(3);
    const char* fmt = v == 0 ? "%c%c%c%c%c %c%c%c%c%c"
                     : v == 1 ? "%c%c%c%c%c%c%c%c%c%c"
                              : "+91 %c%c%c%c%c %c%c%c%c%c";
    std::snprintf(buf, sizeof buf, fmt, p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7],
                  p[8], p[9]);
    return buf;
  }
  throw ConfigError("corpus generator has no phone shape for locale '" + locale + "'");
}

std::string email_surface(Rng& rng, const LocaleBank& b) {
  static const std::vector<const char*> lasts = {"green", "carter",  "bennett", "weber",
                                                 "fischer", "dubois", "moreau",  "torres",
                                                 "silva", "santos",  "patel",   "sharma"};
  static const std::vector<const char*> domains = {"example.com", "example.org",
                                                   "example.net", "mail.example.dev",
                                                   "team.example.io"};
  std::string local = pick(rng, b.email_locals);
  std::size_t v = rng.below(10);
  if (v < 6) {
    local += '.';
    local += pick(rng, lasts);
  } else if (v < 8) {
    local += '_';
    local += pick(rng, lasts);
  } else {
    local += rng.digit(1, 9);
    local += rng.digit(0, 9);
  }
  return local + "@" + pick(rng, domains);
}

std::string date_surface(Rng& rng, const LocaleBank& b, const std::string& locale) {
  char buf[64];
  int day = 3 + static_cast<int>(rng.below(26));
  int year = 1952 + static_cast<int>(rng.below(73));
  const char* month = pick(rng, b.months);
  std::size_t v = rng.below(10);
  if (locale == "en") {
    if (v < 3)
      std::snprintf(buf, sizeof buf, "%s %d, %d", month, day, year);
    else if (v < 5)
      std::snprintf(buf, sizeof buf, "%s %d", month, day);
    else if (v < 8)
      std::snprintf(buf, sizeof buf, "%d %s %d", day, month, year);
    else
      std::snprintf(buf, sizeof buf, "%d/%d/%d", 1 + static_cast<int>(rng.below(12)),
                    13 + static_cast<int>(rng.below(16)), year);
  } else if (locale == "de") {
    if (v < 6)
      std::snprintf(buf, sizeof buf, "%d. %s %d", day, month, year);
    else if (v < 8)
      std::snprintf(buf, sizeof buf, "%d. %s", day, month);
    else
      std::snprintf(buf, sizeof buf, "%d.%d.%d", day, 1 + static_cast<int>(rng.below(12)),
                    year);
  } else if (locale == "fr") {
    if (v < 6)
      std::snprintf(buf, sizeof buf, "%d %s %d", day, month, year);
    else if (v < 8)
      std::snprintf(buf, sizeof buf, "%d %s", day, month);
    else
      std::snprintf(buf, sizeof buf, "%02d/%02d/%d", day, 1 + static_cast<int>(rng.below(12)),
                    year);
  } else if (locale == "es" || locale == "pt") {
    if (v < 6)
      std::snprintf(buf, sizeof buf, "%d de %s de %d", day, month, year);
    else if (v < 8)
      std::snprintf(buf, sizeof buf, "%d de %s", day, month);
    else
      std::snprintf(buf, sizeof buf, "%02d/%02d/%d", day, 1 + static_cast<int>(rng.below(12)),
                    year);
  } else {
    if (v < 8)
      std::snprintf(buf, sizeof buf, "%d %s %d", day, month, year);
    else
      std::snprintf(buf, sizeof buf, "%d %s", day, month);
  }
  return buf;
}

std::string year_surface(Rng& rng) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%d", 1952 + static_cast<int>(rng.below(73)));
  return buf;
}

bool has_digit_run(const std::string& s, std::size_t n) {
  std::size_t run = 0;
  for (char c : s) {
    run = (c >= '0' && c <= '9') ? run + 1 : 0;
    if (run >= n) return true;
  }
  return false;
}

std::string credential_surface(Rng& rng) {
  static const char* alphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
  static const std::vector<std::pair<const char*, int>> kinds = {
      {"ghp_", 36}, {"github_pat_", 28}, {"glpat-", 30}, {"sk-", 32}};
  const auto& [prefix, len] = kinds[rng.below(kinds.size())];
  std::string tok;
  do {
    tok = prefix;
    for (int i = 0; i < len; ++i) tok += alphabet[rng.below(62)];
  } while (has_digit_run(tok, 6) || text::shannon_entropy(tok) <= 4.05);
  return tok;
}

std::string hex_surface(Rng& rng) {
  static const char* hex = "0123456789abcdef";
  std::string s;
  do {
    s.clear();
    for (int i = 0; i < 40; ++i) s += hex[rng.below(16)];
  } while (has_digit_run(s, 6));
  return s;
}

// ---- record assembly --------------------------------------------------

AnnotatedRecord assemble(Rng& rng, const LocaleBank& b, const Tpl& tpl, EntityType type,
                         const std::string& surface, bool gold) {
  AnnotatedRecord rec;
  if (rng.chance(40)) {
    rec.text += pick(rng, b.fillers);
    rec.text += ' ';
  }
  std::size_t start = rec.text.size() + std::strlen(tpl.pre);
  rec.text += tpl.pre;
  rec.text += surface;
  rec.text += tpl.post;
  if (rng.chance(25)) {
    rec.text += ' ';
    rec.text += pick(rng, b.fillers);
  }
  if (gold) {
    GoldMention g;
    g.entity_type = type;
    g.span = {start, start + surface.size()};
    g.surface = surface;
    rec.gold.push_back(std::move(g));
  }
  return rec;
}

AnnotatedRecord make_positive(Rng& rng, EntityType type, const std::string& locale) {
  const LocaleBank& b = bank_for(locale);
  switch (type) {
    case EntityType::EmailAddress:
      return assemble(rng, b, b.email[rng.below(b.email.size())], type,
                      email_surface(rng, b), true);
    case EntityType::PhoneNumber:
      return assemble(rng, b, b.phone[rng.below(b.phone.size())], type,
                      phone_surface(rng, locale), true);
    case EntityType::CreditCard:
      return assemble(rng, b, b.card[rng.below(b.card.size())], type, card_surface(rng),
                      true);
    case EntityType::NationalId:
      if (b.nid.empty())
        throw ConfigError("corpus generator has no national id shape for locale '" +
                          locale + "'");
      return assemble(rng, b, b.nid[rng.below(b.nid.size())], type,
                      nid_surface(rng, locale), true);
    case EntityType::BankAccount:
      if (b.bank.empty())
        throw ConfigError("corpus generator has no bank account shape for locale '" +
                          locale + "'");
      return assemble(rng, b, b.bank[rng.below(b.bank.size())], type,
                      iban_surface(rng, locale), true);
    case EntityType::Date:
      if (rng.chance(10))
        return assemble(rng, b, b.year[rng.below(b.year.size())], type, year_surface(rng),
                        true);
      return assemble(rng, b, b.date[rng.below(b.date.size())], type,
                      date_surface(rng, b, locale), true);
    case EntityType::Person: {
      // Devanagari has no letter case, so the shape-based name walker cannot
      // bound a name run there; person records stay in cased scripts.
      if (b.first_names.empty())
        throw ConfigError("corpus generator has no person shape for locale '" + locale +
                          "'");
      if (rng.chance(30)) {
        std::string surname = pick(rng, b.surnames);
        return assemble(rng, b, b.honorific_person[rng.below(b.honorific_person.size())],
                        type, surname, true);
      }
      std::string name = std::string(pick(rng, b.first_names)) + " " + pick(rng, b.surnames);
      return assemble(rng, b, b.person[rng.below(b.person.size())], type, name, true);
    }
    case EntityType::Location:
      return assemble(rng, b, b.location[rng.below(b.location.size())], type,
                      pick(rng, b.locations), true);
    case EntityType::CredentialToken:
      if (b.credential.empty())
        throw ConfigError("corpus generator has no credential shape for locale '" + locale +
                          "'");
      return assemble(rng, b, b.credential[rng.below(b.credential.size())], type,
                      credential_surface(rng), true);
  }
  throw ConfigError("corpus generator cannot build records for this entity type");
}

constexpr int kNegativeKinds = 11;

// Near-miss negatives: each one walks up to the edge of a detector and fails
// exactly one gate (checksum, structure, TLD, lexicon, entropy, length).
AnnotatedRecord make_negative(Rng& rng, int kind, const std::string& locale) {
  const LocaleBank& b = bank_for(locale);
  const LocaleBank& en = bank_for("en");
  switch (kind) {
    case 0:
      return assemble(rng, b, {"The fixture notes card number ", " as a failing example."},
                      EntityType::CreditCard, broken_card_surface(rng), false);
    case 1: {
      std::string d = aadhaar_digits(rng);
      d.back() = static_cast<char>('0' + (d.back() - '0' + 1) % 10);
      return assemble(rng, b, {"The validation suite rejects the sample id ", " as expected."},
                      EntityType::NationalId, group4(d, ' '), false);
    }
    case 2: {
      char buf[16];
      int g = 1 + static_cast<int>(rng.below(99));
      int s = 1 + static_cast<int>(rng.below(9999));
      int a = 100 + static_cast<int>(rng.below(800));
      if (a == 666) a = 667;
      switch (rng.below(5)) {
        case 0: std::snprintf(buf, sizeof buf, "000-%02d-%04d", g, s); break;
        case 1: std::snprintf(buf, sizeof buf, "666-%02d-%04d", g, s); break;
        case 2: std::snprintf(buf, sizeof buf, "9%02d-%02d-%04d",
                              static_cast<int>(rng.below(100)), g, s); break;
        case 3: std::snprintf(buf, sizeof buf, "%03d-00-%04d", a, s); break;
        default: std::snprintf(buf, sizeof buf, "%03d-%02d-0000", a, g); break;
      }
      return assemble(rng, b, {"Records with id ", " are placeholders in the test data."},
                      EntityType::NationalId, buf, false);
    }
    case 3:
      return assemble(rng, b, {"The parser flags ", " during checksum validation."},
                      EntityType::NationalId, steuer_surface(rng, false), false);
    case 4: {
      char buf[32];
      switch (rng.below(3)) {
        case 0:
          std::snprintf(buf, sizeof buf, "v%d.%d.%d", 1 + static_cast<int>(rng.below(9)),
                        static_cast<int>(rng.below(20)), static_cast<int>(rng.below(10)));
          break;
        case 1:
          std::snprintf(buf, sizeof buf, "%d.%d.%d-rc%d", 1 + static_cast<int>(rng.below(9)),
                        1 + static_cast<int>(rng.below(12)), static_cast<int>(rng.below(10)),
                        1 + static_cast<int>(rng.below(5)));
          break;
        default:
          std::snprintf(buf, sizeof buf, "%d.%d.%d", 1 + static_cast<int>(rng.below(9)),
                        static_cast<int>(rng.below(10)), static_cast<int>(rng.below(100)));
          break;
      }
      return assemble(rng, b, {"The latest build ships as version ", " across regions."},
                      EntityType::Date, buf, false);
    }
    case 5: {
      static const std::vector<const char*> locals = {"noreply@localhost", "build-bot@internal",
                                                      "qa@staging", "pipeline@runner"};
      return assemble(rng, b, {"Automated notices come from ", " on every merge."},
                      EntityType::EmailAddress, pick(rng, locals), false);
    }
    case 6: {
      static const std::vector<const char*> names = {"Lorem Ipsum", "Dolor Sitamet",
                                                     "Sample Tester", "Corpus Fixture"};
      return assemble(rng, b, {"The dry run was reviewed by ", " without findings."},
                      EntityType::Person, pick(rng, names), false);
    }
    case 7: {
      char c = static_cast<char>('a' + rng.below(12));
      std::string tok;
      for (int i = 0; i < 16; ++i) {
        tok += c;
        tok += static_cast<char>(c + 1);
      }
      return assemble(rng, b, {"The mock config sets the api key to ", " by design."},
                      EntityType::CredentialToken, tok, false);
    }
    case 8: {
      std::string frag = "DE";
      frag += rng.digit(0, 9);
      frag += rng.digit(0, 9);
      frag += ' ';
      frag += rng.digit(3, 9);
      for (int i = 0; i < 3; ++i) frag += rng.digit(0, 9);
      return assemble(rng, b, {"The IBAN field shows ", " in the redacted export."},
                      EntityType::BankAccount, frag, false);
    }
    case 9:
      return assemble(rng, b, {"The release points at commit ", " in the changelog."},
                      EntityType::CredentialToken, hex_surface(rng), false);
    default: {
      AnnotatedRecord rec;
      rec.text = pick(rng, b.fillers);
      rec.text += ' ';
      rec.text += pick(rng, en.fillers);
      return rec;
    }
  }
}

}  // namespace

CorpusSpec default_corpus_spec() {
  CorpusSpec spec;
  spec.negative_fraction = 0.3;
  struct Row {
    EntityType type;
    const char* locale;
    std::size_t count;
  };
  static const Row rows[] = {
      {EntityType::EmailAddress, "en", 11},  {EntityType::EmailAddress, "de", 11},
      {EntityType::EmailAddress, "fr", 11},  {EntityType::EmailAddress, "es", 10},
      {EntityType::EmailAddress, "pt", 10},  {EntityType::EmailAddress, "hi-IN", 10},
      {EntityType::PhoneNumber, "en", 11},   {EntityType::PhoneNumber, "de", 11},
      {EntityType::PhoneNumber, "fr", 11},   {EntityType::PhoneNumber, "es", 10},
      {EntityType::PhoneNumber, "pt", 10},   {EntityType::PhoneNumber, "hi-IN", 10},
      {EntityType::CreditCard, "en", 11},    {EntityType::CreditCard, "de", 11},
      {EntityType::CreditCard, "fr", 11},    {EntityType::CreditCard, "es", 10},
      {EntityType::CreditCard, "pt", 10},    {EntityType::CreditCard, "hi-IN", 10},
      {EntityType::NationalId, "en", 21},    {EntityType::NationalId, "de", 21},
      {EntityType::NationalId, "hi-IN", 21}, {EntityType::Date, "en", 11},
      {EntityType::Date, "de", 11},          {EntityType::Date, "fr", 11},
      {EntityType::Date, "es", 10},          {EntityType::Date, "pt", 10},
      {EntityType::Date, "hi-IN", 10},       {EntityType::Person, "en", 13},
      {EntityType::Person, "de", 13},        {EntityType::Person, "fr", 13},
      {EntityType::Person, "es", 12},        {EntityType::Person, "pt", 12},
      {EntityType::Location, "en", 11},      {EntityType::Location, "de", 11},
      {EntityType::Location, "fr", 11},      {EntityType::Location, "es", 10},
      {EntityType::Location, "pt", 10},      {EntityType::Location, "hi-IN", 10},
      {EntityType::BankAccount, "de", 7},    {EntityType::BankAccount, "fr", 7},
      {EntityType::BankAccount, "es", 7},    {EntityType::CredentialToken, "en", 7},
  };
  for (const Row& r : rows) spec.positives.push_back({r.type, r.locale, r.count});
  return spec;
}

CorpusSpec corpus_spec_from_json(std::string_view json_text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(origin + ": corpus spec must be a JSON object");
  CorpusSpec spec;
  try {
    spec.negative_fraction = j.value("negative_fraction", 0.3);
    if (!(spec.negative_fraction >= 0.0) || spec.negative_fraction > 1.0)
      throw ParseError(origin + ": negative_fraction must be within [0, 1]");
    if (!j.contains("positives") || !j["positives"].is_array())
      throw ParseError(origin + ": corpus spec needs a 'positives' array");
    for (const auto& row : j["positives"]) {
      CorpusSlice slice;
      std::string type_name = row.at("entity_type").get<std::string>();
      auto type = entity_type_from(type_name);
      if (!type) throw ParseError(origin + ": unknown entity type '" + type_name + "'");
      slice.entity_type = *type;
      slice.locale = row.at("locale").get<std::string>();
      if (slice.locale.empty()) throw ParseError(origin + ": slice locale must be non-empty");
      slice.count = row.at("count").get<std::size_t>();
      spec.positives.push_back(std::move(slice));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  return spec;
}

std::string corpus_spec_to_json(const CorpusSpec& spec) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : spec.positives)
    rows.push_back({{"entity_type", std::string(to_string(s.entity_type))},
                    {"locale", s.locale},
                    {"count", s.count}});
  nlohmann::json j{{"negative_fraction", spec.negative_fraction},
                   {"positives", std::move(rows)}};
  return j.dump(2);
}

std::vector<AnnotatedRecord> generate_corpus(std::uint64_t seed, const CorpusSpec& spec) {
  std::vector<std::string> locales;
  std::size_t total_pos = 0;
  for (const auto& s : spec.positives) {
    bank_for(s.locale);  // fail fast on unknown locales
    total_pos += s.count;
    if (std::find(locales.begin(), locales.end(), s.locale) == locales.end())
      locales.push_back(s.locale);
  }
  if (total_pos == 0) throw ArgumentError("corpus spec requests zero records");
  if (locales.empty()) locales.push_back("en");

  Rng rng(seed);
  std::vector<AnnotatedRecord> records;
  records.reserve(total_pos * 2);

  bool all_negative = spec.negative_fraction >= 1.0;
  int kind = 0;
  std::size_t loc_idx = 0;
  if (all_negative) {
    for (std::size_t i = 0; i < total_pos; ++i) {
      records.push_back(make_negative(rng, kind, locales[loc_idx]));
      kind = (kind + 1) % kNegativeKinds;
      loc_idx = (loc_idx + 1) % locales.size();
    }
  } else {
    for (const auto& s : spec.positives)
      for (std::size_t i = 0; i < s.count; ++i)
        records.push_back(make_positive(rng, s.entity_type, s.locale));
    double f = spec.negative_fraction;
    auto n_neg = static_cast<std::size_t>(
        std::llround(f / (1.0 - f) * static_cast<double>(total_pos)));
    for (std::size_t i = 0; i < n_neg; ++i) {
      records.push_back(make_negative(rng, kind, locales[loc_idx]));
      kind = (kind + 1) % kNegativeKinds;
      loc_idx = (loc_idx + 1) % locales.size();
    }
  }

  for (std::size_t i = records.size(); i > 1; --i)
    std::swap(records[i - 1], records[rng.below(i)]);
  char buf[16];
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::snprintf(buf, sizeof buf, "rec-%04zu", i + 1);
    records[i].record_id = buf;
  }
  return records;
}

}  // namespace piiguard
