// Generated by tools/gen_unicode_tables.py (Unicode 13.0.0). Do not edit.
#pragma once

#include <cstdint>
#include <cstddef>

namespace segtag::unicode_data {

// (cp << 8) | canonical_combining_class, sorted by cp
inline constexpr uint32_t kCombiningClass[] = {
0x000300E6u,0x000301E6u,0x000302E6u,0x000303E6u,0x000304E6u,0x000305E6u,0x000306E6u,0x000307E6u,
0x000308E6u,0x000309E6u,0x00030AE6u,0x00030BE6u,0x00030CE6u,0x00030DE6u,0x00030EE6u,0x00030FE6u,
0x000310E6u,0x000311E6u,0x000312E6u,0x000313E6u,0x000314E6u,0x000315E8u,0x000316DCu,0x000317DCu,
0x000318DCu,0x000319DCu,0x00031AE8u,0x00031BD8u,0x00031CDCu,0x00031DDCu,0x00031EDCu,0x00031FDCu,
0x000320DCu,0x000321CAu,0x000322CAu,0x000323DCu,0x000324DCu,0x000325DCu,0x000326DCu,0x000327CAu,
0x000328CAu,0x000329DCu,0x00032ADCu,0x00032BDCu,0x00032CDCu,0x00032DDCu,0x00032EDCu,0x00032FDCu,
0x000330DCu,0x000331DCu,0x000332DCu,0x000333DCu,0x00033401u,0x00033501u,0x00033601u,0x00033701u,
0x00033801u,0x000339DCu,0x00033ADCu,0x00033BDCu,0x00033CDCu,0x00033DE6u,0x00033EE6u,0x00033FE6u,
0x000340E6u,0x000341E6u,0x000342E6u,0x000343E6u,0x000344E6u,0x000345F0u,0x000346E6u,0x000347DCu,
0x000348DCu,0x000349DCu,0x00034AE6u,0x00034BE6u,0x00034CE6u,0x00034DDCu,0x00034EDCu,0x000350E6u,
0x000351E6u,0x000352E6u,0x000353DCu,0x000354DCu,0x000355DCu,0x000356DCu,0x000357E6u,0x000358E8u,
0x000359DCu,0x00035ADCu,0x00035BE6u,0x00035CE9u,0x00035DEAu,0x00035EEAu,0x00035FE9u,0x000360EAu,
0x000361EAu,0x000362E9u,0x000363E6u,0x000364E6u,0x000365E6u,0x000366E6u,0x000367E6u,0x000368E6u,
0x000369E6u,0x00036AE6u,0x00036BE6u,0x00036CE6u,0x00036DE6u,0x00036EE6u,0x00036FE6u,0x000483E6u,
0x000484E6u,0x000485E6u,0x000486E6u,0x000487E6u,0x000591DCu,0x000592E6u,0x000593E6u,0x000594E6u,
0x000595E6u,0x000596DCu,0x000597E6u,0x000598E6u,0x000599E6u,0x00059ADEu,0x00059BDCu,0x00059CE6u,
0x00059DE6u,0x00059EE6u,0x00059FE6u,0x0005A0E6u,0x0005A1E6u,0x0005A2DCu,0x0005A3DCu,0x0005A4DCu,
0x0005A5DCu,0x0005A6DCu,0x0005A7DCu,0x0005A8E6u,0x0005A9E6u,0x0005AADCu,0x0005ABE6u,0x0005ACE6u,
0x0005ADDEu,0x0005AEE4u,0x0005AFE6u,0x0005B00Au,0x0005B10Bu,0x0005B20Cu,0x0005B30Du,0x0005B40Eu,
0x0005B50Fu,0x0005B610u,0x0005B711u,0x0005B812u,0x0005B913u,0x0005BA13u,0x0005BB14u,0x0005BC15u,
0x0005BD16u,0x0005BF17u,0x0005C118u,0x0005C219u,0x0005C4E6u,0x0005C5DCu,0x0005C712u,0x000610E6u,
0x000611E6u,0x000612E6u,0x000613E6u,0x000614E6u,0x000615E6u,0x000616E6u,0x000617E6u,0x0006181Eu,
0x0006191Fu,0x00061A20u,0x00064B1Bu,0x00064C1Cu,0x00064D1Du,0x00064E1Eu,0x00064F1Fu,0x00065020u,
0x00065121u,0x00065222u,0x000653E6u,0x000654E6u,0x000655DCu,0x000656DCu,0x000657E6u,0x000658E6u,
0x000659E6u,0x00065AE6u,0x00065BE6u,0x00065CDCu,0x00065DE6u,0x00065EE6u,0x00065FDCu,0x00067023u,
0x0006D6E6u,0x0006D7E6u,0x0006D8E6u,0x0006D9E6u,0x0006DAE6u,0x0006DBE6u,0x0006DCE6u,0x0006DFE6u,
0x0006E0E6u,0x0006E1E6u,0x0006E2E6u,0x0006E3DCu,0x0006E4E6u,0x0006E7E6u,0x0006E8E6u,0x0006EADCu,
0x0006EBE6u,0x0006ECE6u,0x0006EDDCu,0x00071124u,0x000730E6u,0x000731DCu,0x000732E6u,0x000733E6u,
0x000734DCu,0x000735E6u,0x000736E6u,0x000737DCu,0x000738DCu,0x000739DCu,0x00073AE6u,0x00073BDCu,
0x00073CDCu,0x00073DE6u,0x00073EDCu,0x00073FE6u,0x000740E6u,0x000741E6u,0x000742DCu,0x000743E6u,
0x000744DCu,0x000745E6u,0x000746DCu,0x000747E6u,0x000748DCu,0x000749E6u,0x00074AE6u,0x0007EBE6u,
0x0007ECE6u,0x0007EDE6u,0x0007EEE6u,0x0007EFE6u,0x0007F0E6u,0x0007F1E6u,0x0007F2DCu,0x0007F3E6u,
0x0007FDDCu,0x000816E6u,0x000817E6u,0x000818E6u,0x000819E6u,0x00081BE6u,0x00081CE6u,0x00081DE6u,
0x00081EE6u,0x00081FE6u,0x000820E6u,0x000821E6u,0x000822E6u,0x000823E6u,0x000825E6u,0x000826E6u,
0x000827E6u,0x000829E6u,0x00082AE6u,0x00082BE6u,0x00082CE6u,0x00082DE6u,0x000859DCu,0x00085ADCu,
0x00085BDCu,0x0008D3DCu,0x0008D4E6u,0x0008D5E6u,0x0008D6E6u,0x0008D7E6u,0x0008D8E6u,0x0008D9E6u,
0x0008DAE6u,0x0008DBE6u,0x0008DCE6u,0x0008DDE6u,0x0008DEE6u,0x0008DFE6u,0x0008E0E6u,0x0008E1E6u,
0x0008E3DCu,0x0008E4E6u,0x0008E5E6u,0x0008E6DCu,0x0008E7E6u,0x0008E8E6u,0x0008E9DCu,0x0008EAE6u,
0x0008EBE6u,0x0008ECE6u,0x0008EDDCu,0x0008EEDCu,0x0008EFDCu,0x0008F01Bu,0x0008F11Cu,0x0008F21Du,
0x0008F3E6u,0x0008F4E6u,0x0008F5E6u,0x0008F6DCu,0x0008F7E6u,0x0008F8E6u,0x0008F9DCu,0x0008FADCu,
0x0008FBE6u,0x0008FCE6u,0x0008FDE6u,0x0008FEE6u,0x0008FFE6u,0x00093C07u,0x00094D09u,0x000951E6u,
0x000952DCu,0x000953E6u,0x000954E6u,0x0009BC07u,0x0009CD09u,0x0009FEE6u,0x000A3C07u,0x000A4D09u,
0x000ABC07u,0x000ACD09u,0x000B3C07u,0x000B4D09u,0x000BCD09u,0x000C4D09u,0x000C5554u,0x000C565Bu,
0x000CBC07u,0x000CCD09u,0x000D3B09u,0x000D3C09u,0x000D4D09u,0x000DCA09u,0x000E3867u,0x000E3967u,
0x000E3A09u,0x000E486Bu,0x000E496Bu,0x000E4A6Bu,0x000E4B6Bu,0x000EB876u,0x000EB976u,0x000EBA09u,
0x000EC87Au,0x000EC97Au,0x000ECA7Au,0x000ECB7Au,0x000F18DCu,0x000F19DCu,0x000F35DCu,0x000F37DCu,
0x000F39D8u,0x000F7181u,0x000F7282u,0x000F7484u,0x000F7A82u,0x000F7B82u,0x000F7C82u,0x000F7D82u,
0x000F8082u,0x000F82E6u,0x000F83E6u,0x000F8409u,0x000F86E6u,0x000F87E6u,0x000FC6DCu,0x00103707u,
0x00103909u,0x00103A09u,0x00108DDCu,0x00135DE6u,0x00135EE6u,0x00135FE6u,0x00171409u,0x00173409u,
0x0017D209u,0x0017DDE6u,0x0018A9E4u,0x001939DEu,0x00193AE6u,0x00193BDCu,0x001A17E6u,0x001A18DCu,
0x001A6009u,0x001A75E6u,0x001A76E6u,0x001A77E6u,0x001A78E6u,0x001A79E6u,0x001A7AE6u,0x001A7BE6u,
0x001A7CE6u,0x001A7FDCu,0x001AB0E6u,0x001AB1E6u,0x001AB2E6u,0x001AB3E6u,0x001AB4E6u,0x001AB5DCu,
0x001AB6DCu,0x001AB7DCu,0x001AB8DCu,0x001AB9DCu,0x001ABADCu,0x001ABBE6u,0x001ABCE6u,0x001ABDDCu,
0x001ABFDCu,0x001AC0DCu,0x001B3407u,0x001B4409u,0x001B6BE6u,0x001B6CDCu,0x001B6DE6u,0x001B6EE6u,
0x001B6FE6u,0x001B70E6u,0x001B71E6u,0x001B72E6u,0x001B73E6u,0x001BAA09u,0x001BAB09u,0x001BE607u,
0x001BF209u,0x001BF309u,0x001C3707u,0x001CD0E6u,0x001CD1E6u,0x001CD2E6u,0x001CD401u,0x001CD5DCu,
0x001CD6DCu,0x001CD7DCu,0x001CD8DCu,0x001CD9DCu,0x001CDAE6u,0x001CDBE6u,0x001CDCDCu,0x001CDDDCu,
0x001CDEDCu,0x001CDFDCu,0x001CE0E6u,0x001CE201u,0x001CE301u,0x001CE401u,0x001CE501u,0x001CE601u,
0x001CE701u,0x001CE801u,0x001CEDDCu,0x001CF4E6u,0x001CF8E6u,0x001CF9E6u,0x001DC0E6u,0x001DC1E6u,
0x001DC2DCu,0x001DC3E6u,0x001DC4E6u,0x001DC5E6u,0x001DC6E6u,0x001DC7E6u,0x001DC8E6u,0x001DC9E6u,
0x001DCADCu,0x001DCBE6u,0x001DCCE6u,0x001DCDEAu,0x001DCED6u,0x001DCFDCu,0x001DD0CAu,0x001DD1E6u,
0x001DD2E6u,0x001DD3E6u,0x001DD4E6u,0x001DD5E6u,0x001DD6E6u,0x001DD7E6u,0x001DD8E6u,0x001DD9E6u,
0x001DDAE6u,0x001DDBE6u,0x001DDCE6u,0x001DDDE6u,0x001DDEE6u,0x001DDFE6u,0x001DE0E6u,0x001DE1E6u,
0x001DE2E6u,0x001DE3E6u,0x001DE4E6u,0x001DE5E6u,0x001DE6E6u,0x001DE7E6u,0x001DE8E6u,0x001DE9E6u,
0x001DEAE6u,0x001DEBE6u,0x001DECE6u,0x001DEDE6u,0x001DEEE6u,0x001DEFE6u,0x001DF0E6u,0x001DF1E6u,
0x001DF2E6u,0x001DF3E6u,0x001DF4E6u,0x001DF5E6u,0x001DF6E8u,0x001DF7E4u,0x001DF8E4u,0x001DF9DCu,
0x001DFBE6u,0x001DFCE9u,0x001DFDDCu,0x001DFEE6u,0x001DFFDCu,0x0020D0E6u,0x0020D1E6u,0x0020D201u,
0x0020D301u,0x0020D4E6u,0x0020D5E6u,0x0020D6E6u,0x0020D7E6u,0x0020D801u,0x0020D901u,0x0020DA01u,
0x0020DBE6u,0x0020DCE6u,0x0020E1E6u,0x0020E501u,0x0020E601u,0x0020E7E6u,0x0020E8DCu,0x0020E9E6u,
0x0020EA01u,0x0020EB01u,0x0020ECDCu,0x0020EDDCu,0x0020EEDCu,0x0020EFDCu,0x0020F0E6u,0x002CEFE6u,
0x002CF0E6u,0x002CF1E6u,0x002D7F09u,0x002DE0E6u,0x002DE1E6u,0x002DE2E6u,0x002DE3E6u,0x002DE4E6u,
0x002DE5E6u,0x002DE6E6u,0x002DE7E6u,0x002DE8E6u,0x002DE9E6u,0x002DEAE6u,0x002DEBE6u,0x002DECE6u,
0x002DEDE6u,0x002DEEE6u,0x002DEFE6u,0x002DF0E6u,0x002DF1E6u,0x002DF2E6u,0x002DF3E6u,0x002DF4E6u,
0x002DF5E6u,0x002DF6E6u,0x002DF7E6u,0x002DF8E6u,0x002DF9E6u,0x002DFAE6u,0x002DFBE6u,0x002DFCE6u,
0x002DFDE6u,0x002DFEE6u,0x002DFFE6u,0x00302ADAu,0x00302BE4u,0x00302CE8u,0x00302DDEu,0x00302EE0u,
0x00302FE0u,0x00309908u,0x00309A08u,0x00A66FE6u,0x00A674E6u,0x00A675E6u,0x00A676E6u,0x00A677E6u,
0x00A678E6u,0x00A679E6u,0x00A67AE6u,0x00A67BE6u,0x00A67CE6u,0x00A67DE6u,0x00A69EE6u,0x00A69FE6u,
0x00A6F0E6u,0x00A6F1E6u,0x00A80609u,0x00A82C09u,0x00A8C409u,0x00A8E0E6u,0x00A8E1E6u,0x00A8E2E6u,
0x00A8E3E6u,0x00A8E4E6u,0x00A8E5E6u,0x00A8E6E6u,0x00A8E7E6u,0x00A8E8E6u,0x00A8E9E6u,0x00A8EAE6u,
0x00A8EBE6u,0x00A8ECE6u,0x00A8EDE6u,0x00A8EEE6u,0x00A8EFE6u,0x00A8F0E6u,0x00A8F1E6u,0x00A92BDCu,
0x00A92CDCu,0x00A92DDCu,0x00A95309u,0x00A9B307u,0x00A9C009u,0x00AAB0E6u,0x00AAB2E6u,0x00AAB3E6u,
0x00AAB4DCu,0x00AAB7E6u,0x00AAB8E6u,0x00AABEE6u,0x00AABFE6u,0x00AAC1E6u,0x00AAF609u,0x00ABED09u,
0x00FB1E1Au,0x00FE20E6u,0x00FE21E6u,0x00FE22E6u,0x00FE23E6u,0x00FE24E6u,0x00FE25E6u,0x00FE26E6u,
0x00FE27DCu,0x00FE28DCu,0x00FE29DCu,0x00FE2ADCu,0x00FE2BDCu,0x00FE2CDCu,0x00FE2DDCu,0x00FE2EE6u,
0x00FE2FE6u,0x0101FDDCu,0x0102E0DCu,0x010376E6u,0x010377E6u,0x010378E6u,0x010379E6u,0x01037AE6u,
0x010A0DDCu,0x010A0FE6u,0x010A38E6u,0x010A3901u,0x010A3ADCu,0x010A3F09u,0x010AE5E6u,0x010AE6DCu,
0x010D24E6u,0x010D25E6u,0x010D26E6u,0x010D27E6u,0x010EABE6u,0x010EACE6u,0x010F46DCu,0x010F47DCu,
0x010F48E6u,0x010F49E6u,0x010F4AE6u,0x010F4BDCu,0x010F4CE6u,0x010F4DDCu,0x010F4EDCu,0x010F4FDCu,
0x010F50DCu,0x01104609u,0x01107F09u,0x0110B909u,0x0110BA07u,0x011100E6u,0x011101E6u,0x011102E6u,
0x01113309u,0x01113409u,0x01117307u,0x0111C009u,0x0111CA07u,0x01123509u,0x01123607u,0x0112E907u,
0x0112EA09u,0x01133B07u,0x01133C07u,0x01134D09u,0x011366E6u,0x011367E6u,0x011368E6u,0x011369E6u,
0x01136AE6u,0x01136BE6u,0x01136CE6u,0x011370E6u,0x011371E6u,0x011372E6u,0x011373E6u,0x011374E6u,
0x01144209u,0x01144607u,0x01145EE6u,0x0114C209u,0x0114C307u,0x0115BF09u,0x0115C007u,0x01163F09u,
0x0116B609u,0x0116B707u,0x01172B09u,0x01183909u,0x01183A07u,0x01193D09u,0x01193E09u,0x01194307u,
0x0119E009u,0x011A3409u,0x011A4709u,0x011A9909u,0x011C3F09u,0x011D4207u,0x011D4409u,0x011D4509u,
0x011D9709u,0x016AF001u,0x016AF101u,0x016AF201u,0x016AF301u,0x016AF401u,0x016B30E6u,0x016B31E6u,
0x016B32E6u,0x016B33E6u,0x016B34E6u,0x016B35E6u,0x016B36E6u,0x016FF006u,0x016FF106u,0x01BC9E01u,
0x01D165D8u,0x01D166D8u,0x01D16701u,0x01D16801u,0x01D16901u,0x01D16DE2u,0x01D16ED8u,0x01D16FD8u,
0x01D170D8u,0x01D171D8u,0x01D172D8u,0x01D17BDCu,0x01D17CDCu,0x01D17DDCu,0x01D17EDCu,0x01D17FDCu,
0x01D180DCu,0x01D181DCu,0x01D182DCu,0x01D185E6u,0x01D186E6u,0x01D187E6u,0x01D188E6u,0x01D189E6u,
0x01D18ADCu,0x01D18BDCu,0x01D1AAE6u,0x01D1ABE6u,0x01D1ACE6u,0x01D1ADE6u,0x01D242E6u,0x01D243E6u,
0x01D244E6u,0x01E000E6u,0x01E001E6u,0x01E002E6u,0x01E003E6u,0x01E004E6u,0x01E005E6u,0x01E006E6u,
0x01E008E6u,0x01E009E6u,0x01E00AE6u,0x01E00BE6u,0x01E00CE6u,0x01E00DE6u,0x01E00EE6u,0x01E00FE6u,
0x01E010E6u,0x01E011E6u,0x01E012E6u,0x01E013E6u,0x01E014E6u,0x01E015E6u,0x01E016E6u,0x01E017E6u,
0x01E018E6u,0x01E01BE6u,0x01E01CE6u,0x01E01DE6u,0x01E01EE6u,0x01E01FE6u,0x01E020E6u,0x01E021E6u,
0x01E023E6u,0x01E024E6u,0x01E026E6u,0x01E027E6u,0x01E028E6u,0x01E029E6u,0x01E02AE6u,0x01E130E6u,
0x01E131E6u,0x01E132E6u,0x01E133E6u,0x01E134E6u,0x01E135E6u,0x01E136E6u,0x01E2ECE6u,0x01E2EDE6u,
0x01E2EEE6u,0x01E2EFE6u,0x01E8D0DCu,0x01E8D1DCu,0x01E8D2DCu,0x01E8D3DCu,0x01E8D4DCu,0x01E8D5DCu,
0x01E8D6DCu,0x01E944E6u,0x01E945E6u,0x01E946E6u,0x01E947E6u,0x01E948E6u,0x01E949E6u,0x01E94A07u,
};
inline constexpr size_t kCombiningClassCount = 872;

// cp, first, second (0 = singleton), sorted by cp
inline constexpr uint32_t kDecomposition[][3] = {
{0xC0,0x41,0x300},
{0xC1,0x41,0x301},
{0xC2,0x41,0x302},
{0xC3,0x41,0x303},
{0xC4,0x41,0x308},
{0xC5,0x41,0x30A},
{0xC7,0x43,0x327},
{0xC8,0x45,0x300},
{0xC9,0x45,0x301},
{0xCA,0x45,0x302},
{0xCB,0x45,0x308},
{0xCC,0x49,0x300},
{0xCD,0x49,0x301},
{0xCE,0x49,0x302},
{0xCF,0x49,0x308},
{0xD1,0x4E,0x303},
{0xD2,0x4F,0x300},
{0xD3,0x4F,0x301},
{0xD4,0x4F,0x302},
{0xD5,0x4F,0x303},
{0xD6,0x4F,0x308},
{0xD9,0x55,0x300},
{0xDA,0x55,0x301},
{0xDB,0x55,0x302},
{0xDC,0x55,0x308},
{0xDD,0x59,0x301},
{0xE0,0x61,0x300},
{0xE1,0x61,0x301},
{0xE2,0x61,0x302},
{0xE3,0x61,0x303},
{0xE4,0x61,0x308},
{0xE5,0x61,0x30A},
{0xE7,0x63,0x327},
{0xE8,0x65,0x300},
{0xE9,0x65,0x301},
{0xEA,0x65,0x302},
{0xEB,0x65,0x308},
{0xEC,0x69,0x300},
{0xED,0x69,0x301},
{0xEE,0x69,0x302},
{0xEF,0x69,0x308},
{0xF1,0x6E,0x303},
{0xF2,0x6F,0x300},
{0xF3,0x6F,0x301},
{0xF4,0x6F,0x302},
{0xF5,0x6F,0x303},
{0xF6,0x6F,0x308},
{0xF9,0x75,0x300},
{0xFA,0x75,0x301},
{0xFB,0x75,0x302},
{0xFC,0x75,0x308},
{0xFD,0x79,0x301},
{0xFF,0x79,0x308},
{0x100,0x41,0x304},
{0x101,0x61,0x304},
{0x102,0x41,0x306},
{0x103,0x61,0x306},
{0x104,0x41,0x328},
{0x105,0x61,0x328},
{0x106,0x43,0x301},
{0x107,0x63,0x301},
{0x108,0x43,0x302},
{0x109,0x63,0x302},
{0x10A,0x43,0x307},
{0x10B,0x63,0x307},
{0x10C,0x43,0x30C},
{0x10D,0x63,0x30C},
{0x10E,0x44,0x30C},
{0x10F,0x64,0x30C},
{0x112,0x45,0x304},
{0x113,0x65,0x304},
{0x114,0x45,0x306},
{0x115,0x65,0x306},
{0x116,0x45,0x307},
{0x117,0x65,0x307},
{0x118,0x45,0x328},
{0x119,0x65,0x328},
{0x11A,0x45,0x30C},
{0x11B,0x65,0x30C},
{0x11C,0x47,0x302},
{0x11D,0x67,0x302},
{0x11E,0x47,0x306},
{0x11F,0x67,0x306},
{0x120,0x47,0x307},
{0x121,0x67,0x307},
{0x122,0x47,0x327},
{0x123,0x67,0x327},
{0x124,0x48,0x302},
{0x125,0x68,0x302},
{0x128,0x49,0x303},
{0x129,0x69,0x303},
{0x12A,0x49,0x304},
{0x12B,0x69,0x304},
{0x12C,0x49,0x306},
{0x12D,0x69,0x306},
{0x12E,0x49,0x328},
{0x12F,0x69,0x328},
{0x130,0x49,0x307},
{0x134,0x4A,0x302},
{0x135,0x6A,0x302},
{0x136,0x4B,0x327},
{0x137,0x6B,0x327},
{0x139,0x4C,0x301},
{0x13A,0x6C,0x301},
{0x13B,0x4C,0x327},
{0x13C,0x6C,0x327},
{0x13D,0x4C,0x30C},
{0x13E,0x6C,0x30C},
{0x143,0x4E,0x301},
{0x144,0x6E,0x301},
{0x145,0x4E,0x327},
{0x146,0x6E,0x327},
{0x147,0x4E,0x30C},
{0x148,0x6E,0x30C},
{0x14C,0x4F,0x304},
{0x14D,0x6F,0x304},
{0x14E,0x4F,0x306},
{0x14F,0x6F,0x306},
{0x150,0x4F,0x30B},
{0x151,0x6F,0x30B},
{0x154,0x52,0x301},
{0x155,0x72,0x301},
{0x156,0x52,0x327},
{0x157,0x72,0x327},
{0x158,0x52,0x30C},
{0x159,0x72,0x30C},
{0x15A,0x53,0x301},
{0x15B,0x73,0x301},
{0x15C,0x53,0x302},
{0x15D,0x73,0x302},
{0x15E,0x53,0x327},
{0x15F,0x73,0x327},
{0x160,0x53,0x30C},
{0x161,0x73,0x30C},
{0x162,0x54,0x327},
{0x163,0x74,0x327},
{0x164,0x54,0x30C},
{0x165,0x74,0x30C},
{0x168,0x55,0x303},
{0x169,0x75,0x303},
{0x16A,0x55,0x304},
{0x16B,0x75,0x304},
{0x16C,0x55,0x306},
{0x16D,0x75,0x306},
{0x16E,0x55,0x30A},
{0x16F,0x75,0x30A},
{0x170,0x55,0x30B},
{0x171,0x75,0x30B},
{0x172,0x55,0x328},
{0x173,0x75,0x328},
{0x174,0x57,0x302},
{0x175,0x77,0x302},
{0x176,0x59,0x302},
{0x177,0x79,0x302},
{0x178,0x59,0x308},
{0x179,0x5A,0x301},
{0x17A,0x7A,0x301},
{0x17B,0x5A,0x307},
{0x17C,0x7A,0x307},
{0x17D,0x5A,0x30C},
{0x17E,0x7A,0x30C},
{0x1A0,0x4F,0x31B},
{0x1A1,0x6F,0x31B},
{0x1AF,0x55,0x31B},
{0x1B0,0x75,0x31B},
{0x1CD,0x41,0x30C},
{0x1CE,0x61,0x30C},
{0x1CF,0x49,0x30C},
{0x1D0,0x69,0x30C},
{0x1D1,0x4F,0x30C},
{0x1D2,0x6F,0x30C},
{0x1D3,0x55,0x30C},
{0x1D4,0x75,0x30C},
{0x1D5,0xDC,0x304},
{0x1D6,0xFC,0x304},
{0x1D7,0xDC,0x301},
{0x1D8,0xFC,0x301},
{0x1D9,0xDC,0x30C},
{0x1DA,0xFC,0x30C},
{0x1DB,0xDC,0x300},
{0x1DC,0xFC,0x300},
{0x1DE,0xC4,0x304},
{0x1DF,0xE4,0x304},
{0x1E0,0x226,0x304},
{0x1E1,0x227,0x304},
{0x1E2,0xC6,0x304},
{0x1E3,0xE6,0x304},
{0x1E6,0x47,0x30C},
{0x1E7,0x67,0x30C},
{0x1E8,0x4B,0x30C},
{0x1E9,0x6B,0x30C},
{0x1EA,0x4F,0x328},
{0x1EB,0x6F,0x328},
{0x1EC,0x1EA,0x304},
{0x1ED,0x1EB,0x304},
{0x1EE,0x1B7,0x30C},
{0x1EF,0x292,0x30C},
{0x1F0,0x6A,0x30C},
{0x1F4,0x47,0x301},
{0x1F5,0x67,0x301},
{0x1F8,0x4E,0x300},
{0x1F9,0x6E,0x300},
{0x1FA,0xC5,0x301},
{0x1FB,0xE5,0x301},
{0x1FC,0xC6,0x301},
{0x1FD,0xE6,0x301},
{0x1FE,0xD8,0x301},
{0x1FF,0xF8,0x301},
{0x200,0x41,0x30F},
{0x201,0x61,0x30F},
{0x202,0x41,0x311},
{0x203,0x61,0x311},
{0x204,0x45,0x30F},
{0x205,0x65,0x30F},
{0x206,0x45,0x311},
{0x207,0x65,0x311},
{0x208,0x49,0x30F},
{0x209,0x69,0x30F},
{0x20A,0x49,0x311},
{0x20B,0x69,0x311},
{0x20C,0x4F,0x30F},
{0x20D,0x6F,0x30F},
{0x20E,0x4F,0x311},
{0x20F,0x6F,0x311},
{0x210,0x52,0x30F},
{0x211,0x72,0x30F},
{0x212,0x52,0x311},
{0x213,0x72,0x311},
{0x214,0x55,0x30F},
{0x215,0x75,0x30F},
{0x216,0x55,0x311},
{0x217,0x75,0x311},
{0x218,0x53,0x326},
{0x219,0x73,0x326},
{0x21A,0x54,0x326},
{0x21B,0x74,0x326},
{0x21E,0x48,0x30C},
{0x21F,0x68,0x30C},
{0x226,0x41,0x307},
{0x227,0x61,0x307},
{0x228,0x45,0x327},
{0x229,0x65,0x327},
{0x22A,0xD6,0x304},
{0x22B,0xF6,0x304},
{0x22C,0xD5,0x304},
{0x22D,0xF5,0x304},
{0x22E,0x4F,0x307},
{0x22F,0x6F,0x307},
{0x230,0x22E,0x304},
{0x231,0x22F,0x304},
{0x232,0x59,0x304},
{0x233,0x79,0x304},
{0x340,0x300,0x0},
{0x341,0x301,0x0},
{0x343,0x313,0x0},
{0x344,0x308,0x301},
{0x374,0x2B9,0x0},
{0x37E,0x3B,0x0},
{0x385,0xA8,0x301},
{0x386,0x391,0x301},
{0x387,0xB7,0x0},
{0x388,0x395,0x301},
{0x389,0x397,0x301},
{0x38A,0x399,0x301},
{0x38C,0x39F,0x301},
{0x38E,0x3A5,0x301},
{0x38F,0x3A9,0x301},
{0x390,0x3CA,0x301},
{0x3AA,0x399,0x308},
{0x3AB,0x3A5,0x308},
{0x3AC,0x3B1,0x301},
{0x3AD,0x3B5,0x301},
{0x3AE,0x3B7,0x301},
{0x3AF,0x3B9,0x301},
{0x3B0,0x3CB,0x301},
{0x3CA,0x3B9,0x308},
{0x3CB,0x3C5,0x308},
{0x3CC,0x3BF,0x301},
{0x3CD,0x3C5,0x301},
{0x3CE,0x3C9,0x301},
{0x3D3,0x3D2,0x301},
{0x3D4,0x3D2,0x308},
{0x400,0x415,0x300},
{0x401,0x415,0x308},
{0x403,0x413,0x301},
{0x407,0x406,0x308},
{0x40C,0x41A,0x301},
{0x40D,0x418,0x300},
{0x40E,0x423,0x306},
{0x419,0x418,0x306},
{0x439,0x438,0x306},
{0x450,0x435,0x300},
{0x451,0x435,0x308},
{0x453,0x433,0x301},
{0x457,0x456,0x308},
{0x45C,0x43A,0x301},
{0x45D,0x438,0x300},
{0x45E,0x443,0x306},
{0x476,0x474,0x30F},
{0x477,0x475,0x30F},
{0x4C1,0x416,0x306},
{0x4C2,0x436,0x306},
{0x4D0,0x410,0x306},
{0x4D1,0x430,0x306},
{0x4D2,0x410,0x308},
{0x4D3,0x430,0x308},
{0x4D6,0x415,0x306},
{0x4D7,0x435,0x306},
{0x4DA,0x4D8,0x308},
{0x4DB,0x4D9,0x308},
{0x4DC,0x416,0x308},
{0x4DD,0x436,0x308},
{0x4DE,0x417,0x308},
{0x4DF,0x437,0x308},
{0x4E2,0x418,0x304},
{0x4E3,0x438,0x304},
{0x4E4,0x418,0x308},
{0x4E5,0x438,0x308},
{0x4E6,0x41E,0x308},
{0x4E7,0x43E,0x308},
{0x4EA,0x4E8,0x308},
{0x4EB,0x4E9,0x308},
{0x4EC,0x42D,0x308},
{0x4ED,0x44D,0x308},
{0x4EE,0x423,0x304},
{0x4EF,0x443,0x304},
{0x4F0,0x423,0x308},
{0x4F1,0x443,0x308},
{0x4F2,0x423,0x30B},
{0x4F3,0x443,0x30B},
{0x4F4,0x427,0x308},
{0x4F5,0x447,0x308},
{0x4F8,0x42B,0x308},
{0x4F9,0x44B,0x308},
{0x622,0x627,0x653},
{0x623,0x627,0x654},
{0x624,0x648,0x654},
{0x625,0x627,0x655},
{0x626,0x64A,0x654},
{0x6C0,0x6D5,0x654},
{0x6C2,0x6C1,0x654},
{0x6D3,0x6D2,0x654},
{0x929,0x928,0x93C},
{0x931,0x930,0x93C},
{0x934,0x933,0x93C},
{0x958,0x915,0x93C},
{0x959,0x916,0x93C},
{0x95A,0x917,0x93C},
{0x95B,0x91C,0x93C},
{0x95C,0x921,0x93C},
{0x95D,0x922,0x93C},
{0x95E,0x92B,0x93C},
{0x95F,0x92F,0x93C},
{0x9CB,0x9C7,0x9BE},
{0x9CC,0x9C7,0x9D7},
{0x9DC,0x9A1,0x9BC},
{0x9DD,0x9A2,0x9BC},
{0x9DF,0x9AF,0x9BC},
{0xA33,0xA32,0xA3C},
{0xA36,0xA38,0xA3C},
{0xA59,0xA16,0xA3C},
{0xA5A,0xA17,0xA3C},
{0xA5B,0xA1C,0xA3C},
{0xA5E,0xA2B,0xA3C},
{0xB48,0xB47,0xB56},
{0xB4B,0xB47,0xB3E},
{0xB4C,0xB47,0xB57},
{0xB5C,0xB21,0xB3C},
{0xB5D,0xB22,0xB3C},
{0xB94,0xB92,0xBD7},
{0xBCA,0xBC6,0xBBE},
{0xBCB,0xBC7,0xBBE},
{0xBCC,0xBC6,0xBD7},
{0xC48,0xC46,0xC56},
{0xCC0,0xCBF,0xCD5},
{0xCC7,0xCC6,0xCD5},
{0xCC8,0xCC6,0xCD6},
{0xCCA,0xCC6,0xCC2},
{0xCCB,0xCCA,0xCD5},
{0xD4A,0xD46,0xD3E},
{0xD4B,0xD47,0xD3E},
{0xD4C,0xD46,0xD57},
{0xDDA,0xDD9,0xDCA},
{0xDDC,0xDD9,0xDCF},
{0xDDD,0xDDC,0xDCA},
{0xDDE,0xDD9,0xDDF},
{0xF43,0xF42,0xFB7},
{0xF4D,0xF4C,0xFB7},
{0xF52,0xF51,0xFB7},
{0xF57,0xF56,0xFB7},
{0xF5C,0xF5B,0xFB7},
{0xF69,0xF40,0xFB5},
{0xF73,0xF71,0xF72},
{0xF75,0xF71,0xF74},
{0xF76,0xFB2,0xF80},
{0xF78,0xFB3,0xF80},
{0xF81,0xF71,0xF80},
{0xF93,0xF92,0xFB7},
{0xF9D,0xF9C,0xFB7},
{0xFA2,0xFA1,0xFB7},
{0xFA7,0xFA6,0xFB7},
{0xFAC,0xFAB,0xFB7},
{0xFB9,0xF90,0xFB5},
{0x1026,0x1025,0x102E},
{0x1B06,0x1B05,0x1B35},
{0x1B08,0x1B07,0x1B35},
{0x1B0A,0x1B09,0x1B35},
{0x1B0C,0x1B0B,0x1B35},
{0x1B0E,0x1B0D,0x1B35},
{0x1B12,0x1B11,0x1B35},
{0x1B3B,0x1B3A,0x1B35},
{0x1B3D,0x1B3C,0x1B35},
{0x1B40,0x1B3E,0x1B35},
{0x1B41,0x1B3F,0x1B35},
{0x1B43,0x1B42,0x1B35},
{0x1E00,0x41,0x325},
{0x1E01,0x61,0x325},
{0x1E02,0x42,0x307},
{0x1E03,0x62,0x307},
{0x1E04,0x42,0x323},
{0x1E05,0x62,0x323},
{0x1E06,0x42,0x331},
{0x1E07,0x62,0x331},
{0x1E08,0xC7,0x301},
{0x1E09,0xE7,0x301},
{0x1E0A,0x44,0x307},
{0x1E0B,0x64,0x307},
{0x1E0C,0x44,0x323},
{0x1E0D,0x64,0x323},
{0x1E0E,0x44,0x331},
{0x1E0F,0x64,0x331},
{0x1E10,0x44,0x327},
{0x1E11,0x64,0x327},
{0x1E12,0x44,0x32D},
{0x1E13,0x64,0x32D},
{0x1E14,0x112,0x300},
{0x1E15,0x113,0x300},
{0x1E16,0x112,0x301},
{0x1E17,0x113,0x301},
{0x1E18,0x45,0x32D},
{0x1E19,0x65,0x32D},
{0x1E1A,0x45,0x330},
{0x1E1B,0x65,0x330},
{0x1E1C,0x228,0x306},
{0x1E1D,0x229,0x306},
{0x1E1E,0x46,0x307},
{0x1E1F,0x66,0x307},
{0x1E20,0x47,0x304},
{0x1E21,0x67,0x304},
{0x1E22,0x48,0x307},
{0x1E23,0x68,0x307},
{0x1E24,0x48,0x323},
{0x1E25,0x68,0x323},
{0x1E26,0x48,0x308},
{0x1E27,0x68,0x308},
{0x1E28,0x48,0x327},
{0x1E29,0x68,0x327},
{0x1E2A,0x48,0x32E},
{0x1E2B,0x68,0x32E},
{0x1E2C,0x49,0x330},
{0x1E2D,0x69,0x330},
{0x1E2E,0xCF,0x301},
{0x1E2F,0xEF,0x301},
{0x1E30,0x4B,0x301},
{0x1E31,0x6B,0x301},
{0x1E32,0x4B,0x323},
{0x1E33,0x6B,0x323},
{0x1E34,0x4B,0x331},
{0x1E35,0x6B,0x331},
{0x1E36,0x4C,0x323},
{0x1E37,0x6C,0x323},
{0x1E38,0x1E36,0x304},
{0x1E39,0x1E37,0x304},
{0x1E3A,0x4C,0x331},
{0x1E3B,0x6C,0x331},
{0x1E3C,0x4C,0x32D},
{0x1E3D,0x6C,0x32D},
{0x1E3E,0x4D,0x301},
{0x1E3F,0x6D,0x301},
{0x1E40,0x4D,0x307},
{0x1E41,0x6D,0x307},
{0x1E42,0x4D,0x323},
{0x1E43,0x6D,0x323},
{0x1E44,0x4E,0x307},
{0x1E45,0x6E,0x307},
{0x1E46,0x4E,0x323},
{0x1E47,0x6E,0x323},
{0x1E48,0x4E,0x331},
{0x1E49,0x6E,0x331},
{0x1E4A,0x4E,0x32D},
{0x1E4B,0x6E,0x32D},
{0x1E4C,0xD5,0x301},
{0x1E4D,0xF5,0x301},
{0x1E4E,0xD5,0x308},
{0x1E4F,0xF5,0x308},
{0x1E50,0x14C,0x300},
{0x1E51,0x14D,0x300},
{0x1E52,0x14C,0x301},
{0x1E53,0x14D,0x301},
{0x1E54,0x50,0x301},
{0x1E55,0x70,0x301},
{0x1E56,0x50,0x307},
{0x1E57,0x70,0x307},
{0x1E58,0x52,0x307},
{0x1E59,0x72,0x307},
{0x1E5A,0x52,0x323},
{0x1E5B,0x72,0x323},
{0x1E5C,0x1E5A,0x304},
{0x1E5D,0x1E5B,0x304},
{0x1E5E,0x52,0x331},
{0x1E5F,0x72,0x331},
{0x1E60,0x53,0x307},
{0x1E61,0x73,0x307},
{0x1E62,0x53,0x323},
{0x1E63,0x73,0x323},
{0x1E64,0x15A,0x307},
{0x1E65,0x15B,0x307},
{0x1E66,0x160,0x307},
{0x1E67,0x161,0x307},
{0x1E68,0x1E62,0x307},
{0x1E69,0x1E63,0x307},
{0x1E6A,0x54,0x307},
{0x1E6B,0x74,0x307},
{0x1E6C,0x54,0x323},
{0x1E6D,0x74,0x323},
{0x1E6E,0x54,0x331},
{0x1E6F,0x74,0x331},
{0x1E70,0x54,0x32D},
{0x1E71,0x74,0x32D},
{0x1E72,0x55,0x324},
{0x1E73,0x75,0x324},
{0x1E74,0x55,0x330},
{0x1E75,0x75,0x330},
{0x1E76,0x55,0x32D},
{0x1E77,0x75,0x32D},
{0x1E78,0x168,0x301},
{0x1E79,0x169,0x301},
{0x1E7A,0x16A,0x308},
{0x1E7B,0x16B,0x308},
{0x1E7C,0x56,0x303},
{0x1E7D,0x76,0x303},
{0x1E7E,0x56,0x323},
{0x1E7F,0x76,0x323},
{0x1E80,0x57,0x300},
{0x1E81,0x77,0x300},
{0x1E82,0x57,0x301},
{0x1E83,0x77,0x301},
{0x1E84,0x57,0x308},
{0x1E85,0x77,0x308},
{0x1E86,0x57,0x307},
{0x1E87,0x77,0x307},
{0x1E88,0x57,0x323},
{0x1E89,0x77,0x323},
{0x1E8A,0x58,0x307},
{0x1E8B,0x78,0x307},
{0x1E8C,0x58,0x308},
{0x1E8D,0x78,0x308},
{0x1E8E,0x59,0x307},
{0x1E8F,0x79,0x307},
{0x1E90,0x5A,0x302},
{0x1E91,0x7A,0x302},
{0x1E92,0x5A,0x323},
{0x1E93,0x7A,0x323},
{0x1E94,0x5A,0x331},
{0x1E95,0x7A,0x331},
{0x1E96,0x68,0x331},
{0x1E97,0x74,0x308},
{0x1E98,0x77,0x30A},
{0x1E99,0x79,0x30A},
{0x1E9B,0x17F,0x307},
{0x1EA0,0x41,0x323},
{0x1EA1,0x61,0x323},
{0x1EA2,0x41,0x309},
{0x1EA3,0x61,0x309},
{0x1EA4,0xC2,0x301},
{0x1EA5,0xE2,0x301},
{0x1EA6,0xC2,0x300},
{0x1EA7,0xE2,0x300},
{0x1EA8,0xC2,0x309},
{0x1EA9,0xE2,0x309},
{0x1EAA,0xC2,0x303},
{0x1EAB,0xE2,0x303},
{0x1EAC,0x1EA0,0x302},
{0x1EAD,0x1EA1,0x302},
{0x1EAE,0x102,0x301},
{0x1EAF,0x103,0x301},
{0x1EB0,0x102,0x300},
{0x1EB1,0x103,0x300},
{0x1EB2,0x102,0x309},
{0x1EB3,0x103,0x309},
{0x1EB4,0x102,0x303},
{0x1EB5,0x103,0x303},
{0x1EB6,0x1EA0,0x306},
{0x1EB7,0x1EA1,0x306},
{0x1EB8,0x45,0x323},
{0x1EB9,0x65,0x323},
{0x1EBA,0x45,0x309},
{0x1EBB,0x65,0x309},
{0x1EBC,0x45,0x303},
{0x1EBD,0x65,0x303},
{0x1EBE,0xCA,0x301},
{0x1EBF,0xEA,0x301},
{0x1EC0,0xCA,0x300},
{0x1EC1,0xEA,0x300},
{0x1EC2,0xCA,0x309},
{0x1EC3,0xEA,0x309},
{0x1EC4,0xCA,0x303},
{0x1EC5,0xEA,0x303},
{0x1EC6,0x1EB8,0x302},
{0x1EC7,0x1EB9,0x302},
{0x1EC8,0x49,0x309},
{0x1EC9,0x69,0x309},
{0x1ECA,0x49,0x323},
{0x1ECB,0x69,0x323},
{0x1ECC,0x4F,0x323},
{0x1ECD,0x6F,0x323},
{0x1ECE,0x4F,0x309},
{0x1ECF,0x6F,0x309},
{0x1ED0,0xD4,0x301},
{0x1ED1,0xF4,0x301},
{0x1ED2,0xD4,0x300},
{0x1ED3,0xF4,0x300},
{0x1ED4,0xD4,0x309},
{0x1ED5,0xF4,0x309},
{0x1ED6,0xD4,0x303},
{0x1ED7,0xF4,0x303},
{0x1ED8,0x1ECC,0x302},
{0x1ED9,0x1ECD,0x302},
{0x1EDA,0x1A0,0x301},
{0x1EDB,0x1A1,0x301},
{0x1EDC,0x1A0,0x300},
{0x1EDD,0x1A1,0x300},
{0x1EDE,0x1A0,0x309},
{0x1EDF,0x1A1,0x309},
{0x1EE0,0x1A0,0x303},
{0x1EE1,0x1A1,0x303},
{0x1EE2,0x1A0,0x323},
{0x1EE3,0x1A1,0x323},
{0x1EE4,0x55,0x323},
{0x1EE5,0x75,0x323},
{0x1EE6,0x55,0x309},
{0x1EE7,0x75,0x309},
{0x1EE8,0x1AF,0x301},
{0x1EE9,0x1B0,0x301},
{0x1EEA,0x1AF,0x300},
{0x1EEB,0x1B0,0x300},
{0x1EEC,0x1AF,0x309},
{0x1EED,0x1B0,0x309},
{0x1EEE,0x1AF,0x303},
{0x1EEF,0x1B0,0x303},
{0x1EF0,0x1AF,0x323},
{0x1EF1,0x1B0,0x323},
{0x1EF2,0x59,0x300},
{0x1EF3,0x79,0x300},
{0x1EF4,0x59,0x323},
{0x1EF5,0x79,0x323},
{0x1EF6,0x59,0x309},
{0x1EF7,0x79,0x309},
{0x1EF8,0x59,0x303},
{0x1EF9,0x79,0x303},
{0x1F00,0x3B1,0x313},
{0x1F01,0x3B1,0x314},
{0x1F02,0x1F00,0x300},
{0x1F03,0x1F01,0x300},
{0x1F04,0x1F00,0x301},
{0x1F05,0x1F01,0x301},
{0x1F06,0x1F00,0x342},
{0x1F07,0x1F01,0x342},
{0x1F08,0x391,0x313},
{0x1F09,0x391,0x314},
{0x1F0A,0x1F08,0x300},
{0x1F0B,0x1F09,0x300},
{0x1F0C,0x1F08,0x301},
{0x1F0D,0x1F09,0x301},
{0x1F0E,0x1F08,0x342},
{0x1F0F,0x1F09,0x342},
{0x1F10,0x3B5,0x313},
{0x1F11,0x3B5,0x314},
{0x1F12,0x1F10,0x300},
{0x1F13,0x1F11,0x300},
{0x1F14,0x1F10,0x301},
{0x1F15,0x1F11,0x301},
{0x1F18,0x395,0x313},
{0x1F19,0x395,0x314},
{0x1F1A,0x1F18,0x300},
{0x1F1B,0x1F19,0x300},
{0x1F1C,0x1F18,0x301},
{0x1F1D,0x1F19,0x301},
{0x1F20,0x3B7,0x313},
{0x1F21,0x3B7,0x314},
{0x1F22,0x1F20,0x300},
{0x1F23,0x1F21,0x300},
{0x1F24,0x1F20,0x301},
{0x1F25,0x1F21,0x301},
{0x1F26,0x1F20,0x342},
{0x1F27,0x1F21,0x342},
{0x1F28,0x397,0x313},
{0x1F29,0x397,0x314},
{0x1F2A,0x1F28,0x300},
{0x1F2B,0x1F29,0x300},
{0x1F2C,0x1F28,0x301},
{0x1F2D,0x1F29,0x301},
{0x1F2E,0x1F28,0x342},
{0x1F2F,0x1F29,0x342},
{0x1F30,0x3B9,0x313},
{0x1F31,0x3B9,0x314},
{0x1F32,0x1F30,0x300},
{0x1F33,0x1F31,0x300},
{0x1F34,0x1F30,0x301},
{0x1F35,0x1F31,0x301},
{0x1F36,0x1F30,0x342},
{0x1F37,0x1F31,0x342},
{0x1F38,0x399,0x313},
{0x1F39,0x399,0x314},
{0x1F3A,0x1F38,0x300},
{0x1F3B,0x1F39,0x300},
{0x1F3C,0x1F38,0x301},
{0x1F3D,0x1F39,0x301},
{0x1F3E,0x1F38,0x342},
{0x1F3F,0x1F39,0x342},
{0x1F40,0x3BF,0x313},
{0x1F41,0x3BF,0x314},
{0x1F42,0x1F40,0x300},
{0x1F43,0x1F41,0x300},
{0x1F44,0x1F40,0x301},
{0x1F45,0x1F41,0x301},
{0x1F48,0x39F,0x313},
{0x1F49,0x39F,0x314},
{0x1F4A,0x1F48,0x300},
{0x1F4B,0x1F49,0x300},
{0x1F4C,0x1F48,0x301},
{0x1F4D,0x1F49,0x301},
{0x1F50,0x3C5,0x313},
{0x1F51,0x3C5,0x314},
{0x1F52,0x1F50,0x300},
{0x1F53,0x1F51,0x300},
{0x1F54,0x1F50,0x301},
{0x1F55,0x1F51,0x301},
{0x1F56,0x1F50,0x342},
{0x1F57,0x1F51,0x342},
{0x1F59,0x3A5,0x314},
{0x1F5B,0x1F59,0x300},
{0x1F5D,0x1F59,0x301},
{0x1F5F,0x1F59,0x342},
{0x1F60,0x3C9,0x313},
{0x1F61,0x3C9,0x314},
{0x1F62,0x1F60,0x300},
{0x1F63,0x1F61,0x300},
{0x1F64,0x1F60,0x301},
{0x1F65,0x1F61,0x301},
{0x1F66,0x1F60,0x342},
{0x1F67,0x1F61,0x342},
{0x1F68,0x3A9,0x313},
{0x1F69,0x3A9,0x314},
{0x1F6A,0x1F68,0x300},
{0x1F6B,0x1F69,0x300},
{0x1F6C,0x1F68,0x301},
{0x1F6D,0x1F69,0x301},
{0x1F6E,0x1F68,0x342},
{0x1F6F,0x1F69,0x342},
{0x1F70,0x3B1,0x300},
{0x1F71,0x3AC,0x0},
{0x1F72,0x3B5,0x300},
{0x1F73,0x3AD,0x0},
{0x1F74,0x3B7,0x300},
{0x1F75,0x3AE,0x0},
{0x1F76,0x3B9,0x300},
{0x1F77,0x3AF,0x0},
{0x1F78,0x3BF,0x300},
{0x1F79,0x3CC,0x0},
{0x1F7A,0x3C5,0x300},
{0x1F7B,0x3CD,0x0},
{0x1F7C,0x3C9,0x300},
{0x1F7D,0x3CE,0x0},
{0x1F80,0x1F00,0x345},
{0x1F81,0x1F01,0x345},
{0x1F82,0x1F02,0x345},
{0x1F83,0x1F03,0x345},
{0x1F84,0x1F04,0x345},
{0x1F85,0x1F05,0x345},
{0x1F86,0x1F06,0x345},
{0x1F87,0x1F07,0x345},
{0x1F88,0x1F08,0x345},
{0x1F89,0x1F09,0x345},
{0x1F8A,0x1F0A,0x345},
{0x1F8B,0x1F0B,0x345},
{0x1F8C,0x1F0C,0x345},
{0x1F8D,0x1F0D,0x345},
{0x1F8E,0x1F0E,0x345},
{0x1F8F,0x1F0F,0x345},
{0x1F90,0x1F20,0x345},
{0x1F91,0x1F21,0x345},
{0x1F92,0x1F22,0x345},
{0x1F93,0x1F23,0x345},
{0x1F94,0x1F24,0x345},
{0x1F95,0x1F25,0x345},
{0x1F96,0x1F26,0x345},
{0x1F97,0x1F27,0x345},
{0x1F98,0x1F28,0x345},
{0x1F99,0x1F29,0x345},
{0x1F9A,0x1F2A,0x345},
{0x1F9B,0x1F2B,0x345},
{0x1F9C,0x1F2C,0x345},
{0x1F9D,0x1F2D,0x345},
{0x1F9E,0x1F2E,0x345},
{0x1F9F,0x1F2F,0x345},
{0x1FA0,0x1F60,0x345},
{0x1FA1,0x1F61,0x345},
{0x1FA2,0x1F62,0x345},
{0x1FA3,0x1F63,0x345},
{0x1FA4,0x1F64,0x345},
{0x1FA5,0x1F65,0x345},
{0x1FA6,0x1F66,0x345},
{0x1FA7,0x1F67,0x345},
{0x1FA8,0x1F68,0x345},
{0x1FA9,0x1F69,0x345},
{0x1FAA,0x1F6A,0x345},
{0x1FAB,0x1F6B,0x345},
{0x1FAC,0x1F6C,0x345},
{0x1FAD,0x1F6D,0x345},
{0x1FAE,0x1F6E,0x345},
{0x1FAF,0x1F6F,0x345},
{0x1FB0,0x3B1,0x306},
{0x1FB1,0x3B1,0x304},
{0x1FB2,0x1F70,0x345},
{0x1FB3,0x3B1,0x345},
{0x1FB4,0x3AC,0x345},
{0x1FB6,0x3B1,0x342},
{0x1FB7,0x1FB6,0x345},
{0x1FB8,0x391,0x306},
{0x1FB9,0x391,0x304},
{0x1FBA,0x391,0x300},
{0x1FBB,0x386,0x0},
{0x1FBC,0x391,0x345},
{0x1FBE,0x3B9,0x0},
{0x1FC1,0xA8,0x342},
{0x1FC2,0x1F74,0x345},
{0x1FC3,0x3B7,0x345},
{0x1FC4,0x3AE,0x345},
{0x1FC6,0x3B7,0x342},
{0x1FC7,0x1FC6,0x345},
{0x1FC8,0x395,0x300},
{0x1FC9,0x388,0x0},
{0x1FCA,0x397,0x300},
{0x1FCB,0x389,0x0},
{0x1FCC,0x397,0x345},
{0x1FCD,0x1FBF,0x300},
{0x1FCE,0x1FBF,0x301},
{0x1FCF,0x1FBF,0x342},
{0x1FD0,0x3B9,0x306},
{0x1FD1,0x3B9,0x304},
{0x1FD2,0x3CA,0x300},
{0x1FD3,0x390,0x0},
{0x1FD6,0x3B9,0x342},
{0x1FD7,0x3CA,0x342},
{0x1FD8,0x399,0x306},
{0x1FD9,0x399,0x304},
{0x1FDA,0x399,0x300},
{0x1FDB,0x38A,0x0},
{0x1FDD,0x1FFE,0x300},
{0x1FDE,0x1FFE,0x301},
{0x1FDF,0x1FFE,0x342},
{0x1FE0,0x3C5,0x306},
{0x1FE1,0x3C5,0x304},
{0x1FE2,0x3CB,0x300},
{0x1FE3,0x3B0,0x0},
{0x1FE4,0x3C1,0x313},
{0x1FE5,0x3C1,0x314},
{0x1FE6,0x3C5,0x342},
{0x1FE7,0x3CB,0x342},
{0x1FE8,0x3A5,0x306},
{0x1FE9,0x3A5,0x304},
{0x1FEA,0x3A5,0x300},
{0x1FEB,0x38E,0x0},
{0x1FEC,0x3A1,0x314},
{0x1FED,0xA8,0x300},
{0x1FEE,0x385,0x0},
{0x1FEF,0x60,0x0},
{0x1FF2,0x1F7C,0x345},
{0x1FF3,0x3C9,0x345},
{0x1FF4,0x3CE,0x345},
{0x1FF6,0x3C9,0x342},
{0x1FF7,0x1FF6,0x345},
{0x1FF8,0x39F,0x300},
{0x1FF9,0x38C,0x0},
{0x1FFA,0x3A9,0x300},
{0x1FFB,0x38F,0x0},
{0x1FFC,0x3A9,0x345},
{0x1FFD,0xB4,0x0},
{0x2000,0x2002,0x0},
{0x2001,0x2003,0x0},
{0x2126,0x3A9,0x0},
{0x212A,0x4B,0x0},
{0x212B,0xC5,0x0},
{0x219A,0x2190,0x338},
{0x219B,0x2192,0x338},
{0x21AE,0x2194,0x338},
{0x21CD,0x21D0,0x338},
{0x21CE,0x21D4,0x338},
{0x21CF,0x21D2,0x338},
{0x2204,0x2203,0x338},
{0x2209,0x2208,0x338},
{0x220C,0x220B,0x338},
{0x2224,0x2223,0x338},
{0x2226,0x2225,0x338},
{0x2241,0x223C,0x338},
{0x2244,0x2243,0x338},
{0x2247,0x2245,0x338},
{0x2249,0x2248,0x338},
{0x2260,0x3D,0x338},
{0x2262,0x2261,0x338},
{0x226D,0x224D,0x338},
{0x226E,0x3C,0x338},
{0x226F,0x3E,0x338},
{0x2270,0x2264,0x338},
{0x2271,0x2265,0x338},
{0x2274,0x2272,0x338},
{0x2275,0x2273,0x338},
{0x2278,0x2276,0x338},
{0x2279,0x2277,0x338},
{0x2280,0x227A,0x338},
{0x2281,0x227B,0x338},
{0x2284,0x2282,0x338},
{0x2285,0x2283,0x338},
{0x2288,0x2286,0x338},
{0x2289,0x2287,0x338},
{0x22AC,0x22A2,0x338},
{0x22AD,0x22A8,0x338},
{0x22AE,0x22A9,0x338},
{0x22AF,0x22AB,0x338},
{0x22E0,0x227C,0x338},
{0x22E1,0x227D,0x338},
{0x22E2,0x2291,0x338},
{0x22E3,0x2292,0x338},
{0x22EA,0x22B2,0x338},
{0x22EB,0x22B3,0x338},
{0x22EC,0x22B4,0x338},
{0x22ED,0x22B5,0x338},
{0x2329,0x3008,0x0},
{0x232A,0x3009,0x0},
{0x2ADC,0x2ADD,0x338},
{0x304C,0x304B,0x3099},
{0x304E,0x304D,0x3099},
{0x3050,0x304F,0x3099},
{0x3052,0x3051,0x3099},
{0x3054,0x3053,0x3099},
{0x3056,0x3055,0x3099},
{0x3058,0x3057,0x3099},
{0x305A,0x3059,0x3099},
{0x305C,0x305B,0x3099},
{0x305E,0x305D,0x3099},
{0x3060,0x305F,0x3099},
{0x3062,0x3061,0x3099},
{0x3065,0x3064,0x3099},
{0x3067,0x3066,0x3099},
{0x3069,0x3068,0x3099},
{0x3070,0x306F,0x3099},
{0x3071,0x306F,0x309A},
{0x3073,0x3072,0x3099},
{0x3074,0x3072,0x309A},
{0x3076,0x3075,0x3099},
{0x3077,0x3075,0x309A},
{0x3079,0x3078,0x3099},
{0x307A,0x3078,0x309A},
{0x307C,0x307B,0x3099},
{0x307D,0x307B,0x309A},
{0x3094,0x3046,0x3099},
{0x309E,0x309D,0x3099},
{0x30AC,0x30AB,0x3099},
{0x30AE,0x30AD,0x3099},
{0x30B0,0x30AF,0x3099},
{0x30B2,0x30B1,0x3099},
{0x30B4,0x30B3,0x3099},
{0x30B6,0x30B5,0x3099},
{0x30B8,0x30B7,0x3099},
{0x30BA,0x30B9,0x3099},
{0x30BC,0x30BB,0x3099},
{0x30BE,0x30BD,0x3099},
{0x30C0,0x30BF,0x3099},
{0x30C2,0x30C1,0x3099},
{0x30C5,0x30C4,0x3099},
{0x30C7,0x30C6,0x3099},
{0x30C9,0x30C8,0x3099},
{0x30D0,0x30CF,0x3099},
{0x30D1,0x30CF,0x309A},
{0x30D3,0x30D2,0x3099},
{0x30D4,0x30D2,0x309A},
{0x30D6,0x30D5,0x3099},
{0x30D7,0x30D5,0x309A},
{0x30D9,0x30D8,0x3099},
{0x30DA,0x30D8,0x309A},
{0x30DC,0x30DB,0x3099},
{0x30DD,0x30DB,0x309A},
{0x30F4,0x30A6,0x3099},
{0x30F7,0x30EF,0x3099},
{0x30F8,0x30F0,0x3099},
{0x30F9,0x30F1,0x3099},
{0x30FA,0x30F2,0x3099},
{0x30FE,0x30FD,0x3099},
{0xF900,0x8C48,0x0},
{0xF901,0x66F4,0x0},
{0xF902,0x8ECA,0x0},
{0xF903,0x8CC8,0x0},
{0xF904,0x6ED1,0x0},
{0xF905,0x4E32,0x0},
{0xF906,0x53E5,0x0},
{0xF907,0x9F9C,0x0},
{0xF908,0x9F9C,0x0},
{0xF909,0x5951,0x0},
{0xF90A,0x91D1,0x0},
{0xF90B,0x5587,0x0},
{0xF90C,0x5948,0x0},
{0xF90D,0x61F6,0x0},
{0xF90E,0x7669,0x0},
{0xF90F,0x7F85,0x0},
{0xF910,0x863F,0x0},
{0xF911,0x87BA,0x0},
{0xF912,0x88F8,0x0},
{0xF913,0x908F,0x0},
{0xF914,0x6A02,0x0},
{0xF915,0x6D1B,0x0},
{0xF916,0x70D9,0x0},
{0xF917,0x73DE,0x0},
{0xF918,0x843D,0x0},
{0xF919,0x916A,0x0},
{0xF91A,0x99F1,0x0},
{0xF91B,0x4E82,0x0},
{0xF91C,0x5375,0x0},
{0xF91D,0x6B04,0x0},
{0xF91E,0x721B,0x0},
{0xF91F,0x862D,0x0},
{0xF920,0x9E1E,0x0},
{0xF921,0x5D50,0x0},
{0xF922,0x6FEB,0x0},
{0xF923,0x85CD,0x0},
{0xF924,0x8964,0x0},
{0xF925,0x62C9,0x0},
{0xF926,0x81D8,0x0},
{0xF927,0x881F,0x0},
{0xF928,0x5ECA,0x0},
{0xF929,0x6717,0x0},
{0xF92A,0x6D6A,0x0},
{0xF92B,0x72FC,0x0},
{0xF92C,0x90CE,0x0},
{0xF92D,0x4F86,0x0},
{0xF92E,0x51B7,0x0},
{0xF92F,0x52DE,0x0},
{0xF930,0x64C4,0x0},
{0xF931,0x6AD3,0x0},
{0xF932,0x7210,0x0},
{0xF933,0x76E7,0x0},
{0xF934,0x8001,0x0},
{0xF935,0x8606,0x0},
{0xF936,0x865C,0x0},
{0xF937,0x8DEF,0x0},
{0xF938,0x9732,0x0},
{0xF939,0x9B6F,0x0},
{0xF93A,0x9DFA,0x0},
{0xF93B,0x788C,0x0},
{0xF93C,0x797F,0x0},
{0xF93D,0x7DA0,0x0},
{0xF93E,0x83C9,0x0},
{0xF93F,0x9304,0x0},
{0xF940,0x9E7F,0x0},
{0xF941,0x8AD6,0x0},
{0xF942,0x58DF,0x0},
{0xF943,0x5F04,0x0},
{0xF944,0x7C60,0x0},
{0xF945,0x807E,0x0},
{0xF946,0x7262,0x0},
{0xF947,0x78CA,0x0},
{0xF948,0x8CC2,0x0},
{0xF949,0x96F7,0x0},
{0xF94A,0x58D8,0x0},
{0xF94B,0x5C62,0x0},
{0xF94C,0x6A13,0x0},
{0xF94D,0x6DDA,0x0},
{0xF94E,0x6F0F,0x0},
{0xF94F,0x7D2F,0x0},
{0xF950,0x7E37,0x0},
{0xF951,0x964B,0x0},
{0xF952,0x52D2,0x0},
{0xF953,0x808B,0x0},
{0xF954,0x51DC,0x0},
{0xF955,0x51CC,0x0},
{0xF956,0x7A1C,0x0},
{0xF957,0x7DBE,0x0},
{0xF958,0x83F1,0x0},
{0xF959,0x9675,0x0},
{0xF95A,0x8B80,0x0},
{0xF95B,0x62CF,0x0},
{0xF95C,0x6A02,0x0},
{0xF95D,0x8AFE,0x0},
{0xF95E,0x4E39,0x0},
{0xF95F,0x5BE7,0x0},
{0xF960,0x6012,0x0},
{0xF961,0x7387,0x0},
{0xF962,0x7570,0x0},
{0xF963,0x5317,0x0},
{0xF964,0x78FB,0x0},
{0xF965,0x4FBF,0x0},
{0xF966,0x5FA9,0x0},
{0xF967,0x4E0D,0x0},
{0xF968,0x6CCC,0x0},
{0xF969,0x6578,0x0},
{0xF96A,0x7D22,0x0},
{0xF96B,0x53C3,0x0},
{0xF96C,0x585E,0x0},
{0xF96D,0x7701,0x0},
{0xF96E,0x8449,0x0},
{0xF96F,0x8AAA,0x0},
{0xF970,0x6BBA,0x0},
{0xF971,0x8FB0,0x0},
{0xF972,0x6C88,0x0},
{0xF973,0x62FE,0x0},
{0xF974,0x82E5,0x0},
{0xF975,0x63A0,0x0},
{0xF976,0x7565,0x0},
{0xF977,0x4EAE,0x0},
{0xF978,0x5169,0x0},
{0xF979,0x51C9,0x0},
{0xF97A,0x6881,0x0},
{0xF97B,0x7CE7,0x0},
{0xF97C,0x826F,0x0},
{0xF97D,0x8AD2,0x0},
{0xF97E,0x91CF,0x0},
{0xF97F,0x52F5,0x0},
{0xF980,0x5442,0x0},
{0xF981,0x5973,0x0},
{0xF982,0x5EEC,0x0},
{0xF983,0x65C5,0x0},
{0xF984,0x6FFE,0x0},
{0xF985,0x792A,0x0},
{0xF986,0x95AD,0x0},
{0xF987,0x9A6A,0x0},
{0xF988,0x9E97,0x0},
{0xF989,0x9ECE,0x0},
{0xF98A,0x529B,0x0},
{0xF98B,0x66C6,0x0},
{0xF98C,0x6B77,0x0},
{0xF98D,0x8F62,0x0},
{0xF98E,0x5E74,0x0},
{0xF98F,0x6190,0x0},
{0xF990,0x6200,0x0},
{0xF991,0x649A,0x0},
{0xF992,0x6F23,0x0},
{0xF993,0x7149,0x0},
{0xF994,0x7489,0x0},
{0xF995,0x79CA,0x0},
{0xF996,0x7DF4,0x0},
{0xF997,0x806F,0x0},
{0xF998,0x8F26,0x0},
{0xF999,0x84EE,0x0},
{0xF99A,0x9023,0x0},
{0xF99B,0x934A,0x0},
{0xF99C,0x5217,0x0},
{0xF99D,0x52A3,0x0},
{0xF99E,0x54BD,0x0},
{0xF99F,0x70C8,0x0},
{0xF9A0,0x88C2,0x0},
{0xF9A1,0x8AAA,0x0},
{0xF9A2,0x5EC9,0x0},
{0xF9A3,0x5FF5,0x0},
{0xF9A4,0x637B,0x0},
{0xF9A5,0x6BAE,0x0},
{0xF9A6,0x7C3E,0x0},
{0xF9A7,0x7375,0x0},
{0xF9A8,0x4EE4,0x0},
{0xF9A9,0x56F9,0x0},
{0xF9AA,0x5BE7,0x0},
{0xF9AB,0x5DBA,0x0},
{0xF9AC,0x601C,0x0},
{0xF9AD,0x73B2,0x0},
{0xF9AE,0x7469,0x0},
{0xF9AF,0x7F9A,0x0},
{0xF9B0,0x8046,0x0},
{0xF9B1,0x9234,0x0},
{0xF9B2,0x96F6,0x0},
{0xF9B3,0x9748,0x0},
{0xF9B4,0x9818,0x0},
{0xF9B5,0x4F8B,0x0},
{0xF9B6,0x79AE,0x0},
{0xF9B7,0x91B4,0x0},
{0xF9B8,0x96B8,0x0},
{0xF9B9,0x60E1,0x0},
{0xF9BA,0x4E86,0x0},
{0xF9BB,0x50DA,0x0},
{0xF9BC,0x5BEE,0x0},
{0xF9BD,0x5C3F,0x0},
{0xF9BE,0x6599,0x0},
{0xF9BF,0x6A02,0x0},
{0xF9C0,0x71CE,0x0},
{0xF9C1,0x7642,0x0},
{0xF9C2,0x84FC,0x0},
{0xF9C3,0x907C,0x0},
{0xF9C4,0x9F8D,0x0},
{0xF9C5,0x6688,0x0},
{0xF9C6,0x962E,0x0},
{0xF9C7,0x5289,0x0},
{0xF9C8,0x677B,0x0},
{0xF9C9,0x67F3,0x0},
{0xF9CA,0x6D41,0x0},
{0xF9CB,0x6E9C,0x0},
{0xF9CC,0x7409,0x0},
{0xF9CD,0x7559,0x0},
{0xF9CE,0x786B,0x0},
{0xF9CF,0x7D10,0x0},
{0xF9D0,0x985E,0x0},
{0xF9D1,0x516D,0x0},
{0xF9D2,0x622E,0x0},
{0xF9D3,0x9678,0x0},
{0xF9D4,0x502B,0x0},
{0xF9D5,0x5D19,0x0},
{0xF9D6,0x6DEA,0x0},
{0xF9D7,0x8F2A,0x0},
{0xF9D8,0x5F8B,0x0},
{0xF9D9,0x6144,0x0},
{0xF9DA,0x6817,0x0},
{0xF9DB,0x7387,0x0},
{0xF9DC,0x9686,0x0},
{0xF9DD,0x5229,0x0},
{0xF9DE,0x540F,0x0},
{0xF9DF,0x5C65,0x0},
{0xF9E0,0x6613,0x0},
{0xF9E1,0x674E,0x0},
{0xF9E2,0x68A8,0x0},
{0xF9E3,0x6CE5,0x0},
{0xF9E4,0x7406,0x0},
{0xF9E5,0x75E2,0x0},
{0xF9E6,0x7F79,0x0},
{0xF9E7,0x88CF,0x0},
{0xF9E8,0x88E1,0x0},
{0xF9E9,0x91CC,0x0},
{0xF9EA,0x96E2,0x0},
{0xF9EB,0x533F,0x0},
{0xF9EC,0x6EBA,0x0},
{0xF9ED,0x541D,0x0},
{0xF9EE,0x71D0,0x0},
{0xF9EF,0x7498,0x0},
{0xF9F0,0x85FA,0x0},
{0xF9F1,0x96A3,0x0},
{0xF9F2,0x9C57,0x0},
{0xF9F3,0x9E9F,0x0},
{0xF9F4,0x6797,0x0},
{0xF9F5,0x6DCB,0x0},
{0xF9F6,0x81E8,0x0},
{0xF9F7,0x7ACB,0x0},
{0xF9F8,0x7B20,0x0},
{0xF9F9,0x7C92,0x0},
{0xF9FA,0x72C0,0x0},
{0xF9FB,0x7099,0x0},
{0xF9FC,0x8B58,0x0},
{0xF9FD,0x4EC0,0x0},
{0xF9FE,0x8336,0x0},
{0xF9FF,0x523A,0x0},
{0xFA00,0x5207,0x0},
{0xFA01,0x5EA6,0x0},
{0xFA02,0x62D3,0x0},
{0xFA03,0x7CD6,0x0},
{0xFA04,0x5B85,0x0},
{0xFA05,0x6D1E,0x0},
{0xFA06,0x66B4,0x0},
{0xFA07,0x8F3B,0x0},
{0xFA08,0x884C,0x0},
{0xFA09,0x964D,0x0},
{0xFA0A,0x898B,0x0},
{0xFA0B,0x5ED3,0x0},
{0xFA0C,0x5140,0x0},
{0xFA0D,0x55C0,0x0},
{0xFA10,0x585A,0x0},
{0xFA12,0x6674,0x0},
{0xFA15,0x51DE,0x0},
{0xFA16,0x732A,0x0},
{0xFA17,0x76CA,0x0},
{0xFA18,0x793C,0x0},
{0xFA19,0x795E,0x0},
{0xFA1A,0x7965,0x0},
{0xFA1B,0x798F,0x0},
{0xFA1C,0x9756,0x0},
{0xFA1D,0x7CBE,0x0},
{0xFA1E,0x7FBD,0x0},
{0xFA20,0x8612,0x0},
{0xFA22,0x8AF8,0x0},
{0xFA25,0x9038,0x0},
{0xFA26,0x90FD,0x0},
{0xFA2A,0x98EF,0x0},
{0xFA2B,0x98FC,0x0},
{0xFA2C,0x9928,0x0},
{0xFA2D,0x9DB4,0x0},
{0xFA2E,0x90DE,0x0},
{0xFA2F,0x96B7,0x0},
{0xFA30,0x4FAE,0x0},
{0xFA31,0x50E7,0x0},
{0xFA32,0x514D,0x0},
{0xFA33,0x52C9,0x0},
{0xFA34,0x52E4,0x0},
{0xFA35,0x5351,0x0},
{0xFA36,0x559D,0x0},
{0xFA37,0x5606,0x0},
{0xFA38,0x5668,0x0},
{0xFA39,0x5840,0x0},
{0xFA3A,0x58A8,0x0},
{0xFA3B,0x5C64,0x0},
{0xFA3C,0x5C6E,0x0},
{0xFA3D,0x6094,0x0},
{0xFA3E,0x6168,0x0},
{0xFA3F,0x618E,0x0},
{0xFA40,0x61F2,0x0},
{0xFA41,0x654F,0x0},
{0xFA42,0x65E2,0x0},
{0xFA43,0x6691,0x0},
{0xFA44,0x6885,0x0},
{0xFA45,0x6D77,0x0},
{0xFA46,0x6E1A,0x0},
{0xFA47,0x6F22,0x0},
{0xFA48,0x716E,0x0},
{0xFA49,0x722B,0x0},
{0xFA4A,0x7422,0x0},
{0xFA4B,0x7891,0x0},
{0xFA4C,0x793E,0x0},
{0xFA4D,0x7949,0x0},
{0xFA4E,0x7948,0x0},
{0xFA4F,0x7950,0x0},
{0xFA50,0x7956,0x0},
{0xFA51,0x795D,0x0},
{0xFA52,0x798D,0x0},
{0xFA53,0x798E,0x0},
{0xFA54,0x7A40,0x0},
{0xFA55,0x7A81,0x0},
{0xFA56,0x7BC0,0x0},
{0xFA57,0x7DF4,0x0},
{0xFA58,0x7E09,0x0},
{0xFA59,0x7E41,0x0},
{0xFA5A,0x7F72,0x0},
{0xFA5B,0x8005,0x0},
{0xFA5C,0x81ED,0x0},
{0xFA5D,0x8279,0x0},
{0xFA5E,0x8279,0x0},
{0xFA5F,0x8457,0x0},
{0xFA60,0x8910,0x0},
{0xFA61,0x8996,0x0},
{0xFA62,0x8B01,0x0},
{0xFA63,0x8B39,0x0},
{0xFA64,0x8CD3,0x0},
{0xFA65,0x8D08,0x0},
{0xFA66,0x8FB6,0x0},
{0xFA67,0x9038,0x0},
{0xFA68,0x96E3,0x0},
{0xFA69,0x97FF,0x0},
{0xFA6A,0x983B,0x0},
{0xFA6B,0x6075,0x0},
{0xFA6C,0x242EE,0x0},
{0xFA6D,0x8218,0x0},
{0xFA70,0x4E26,0x0},
{0xFA71,0x51B5,0x0},
{0xFA72,0x5168,0x0},
{0xFA73,0x4F80,0x0},
{0xFA74,0x5145,0x0},
{0xFA75,0x5180,0x0},
{0xFA76,0x52C7,0x0},
{0xFA77,0x52FA,0x0},
{0xFA78,0x559D,0x0},
{0xFA79,0x5555,0x0},
{0xFA7A,0x5599,0x0},
{0xFA7B,0x55E2,0x0},
{0xFA7C,0x585A,0x0},
{0xFA7D,0x58B3,0x0},
{0xFA7E,0x5944,0x0},
{0xFA7F,0x5954,0x0},
{0xFA80,0x5A62,0x0},
{0xFA81,0x5B28,0x0},
{0xFA82,0x5ED2,0x0},
{0xFA83,0x5ED9,0x0},
{0xFA84,0x5F69,0x0},
{0xFA85,0x5FAD,0x0},
{0xFA86,0x60D8,0x0},
{0xFA87,0x614E,0x0},
{0xFA88,0x6108,0x0},
{0xFA89,0x618E,0x0},
{0xFA8A,0x6160,0x0},
{0xFA8B,0x61F2,0x0},
{0xFA8C,0x6234,0x0},
{0xFA8D,0x63C4,0x0},
{0xFA8E,0x641C,0x0},
{0xFA8F,0x6452,0x0},
{0xFA90,0x6556,0x0},
{0xFA91,0x6674,0x0},
{0xFA92,0x6717,0x0},
{0xFA93,0x671B,0x0},
{0xFA94,0x6756,0x0},
{0xFA95,0x6B79,0x0},
{0xFA96,0x6BBA,0x0},
{0xFA97,0x6D41,0x0},
{0xFA98,0x6EDB,0x0},
{0xFA99,0x6ECB,0x0},
{0xFA9A,0x6F22,0x0},
{0xFA9B,0x701E,0x0},
{0xFA9C,0x716E,0x0},
{0xFA9D,0x77A7,0x0},
{0xFA9E,0x7235,0x0},
{0xFA9F,0x72AF,0x0},
{0xFAA0,0x732A,0x0},
{0xFAA1,0x7471,0x0},
{0xFAA2,0x7506,0x0},
{0xFAA3,0x753B,0x0},
{0xFAA4,0x761D,0x0},
{0xFAA5,0x761F,0x0},
{0xFAA6,0x76CA,0x0},
{0xFAA7,0x76DB,0x0},
{0xFAA8,0x76F4,0x0},
{0xFAA9,0x774A,0x0},
{0xFAAA,0x7740,0x0},
{0xFAAB,0x78CC,0x0},
{0xFAAC,0x7AB1,0x0},
{0xFAAD,0x7BC0,0x0},
{0xFAAE,0x7C7B,0x0},
{0xFAAF,0x7D5B,0x0},
{0xFAB0,0x7DF4,0x0},
{0xFAB1,0x7F3E,0x0},
{0xFAB2,0x8005,0x0},
{0xFAB3,0x8352,0x0},
{0xFAB4,0x83EF,0x0},
{0xFAB5,0x8779,0x0},
{0xFAB6,0x8941,0x0},
{0xFAB7,0x8986,0x0},
{0xFAB8,0x8996,0x0},
{0xFAB9,0x8ABF,0x0},
{0xFABA,0x8AF8,0x0},
{0xFABB,0x8ACB,0x0},
{0xFABC,0x8B01,0x0},
{0xFABD,0x8AFE,0x0},
{0xFABE,0x8AED,0x0},
{0xFABF,0x8B39,0x0},
{0xFAC0,0x8B8A,0x0},
{0xFAC1,0x8D08,0x0},
{0xFAC2,0x8F38,0x0},
{0xFAC3,0x9072,0x0},
{0xFAC4,0x9199,0x0},
{0xFAC5,0x9276,0x0},
{0xFAC6,0x967C,0x0},
{0xFAC7,0x96E3,0x0},
{0xFAC8,0x9756,0x0},
{0xFAC9,0x97DB,0x0},
{0xFACA,0x97FF,0x0},
{0xFACB,0x980B,0x0},
{0xFACC,0x983B,0x0},
{0xFACD,0x9B12,0x0},
{0xFACE,0x9F9C,0x0},
{0xFACF,0x2284A,0x0},
{0xFAD0,0x22844,0x0},
{0xFAD1,0x233D5,0x0},
{0xFAD2,0x3B9D,0x0},
{0xFAD3,0x4018,0x0},
{0xFAD4,0x4039,0x0},
{0xFAD5,0x25249,0x0},
{0xFAD6,0x25CD0,0x0},
{0xFAD7,0x27ED3,0x0},
{0xFAD8,0x9F43,0x0},
{0xFAD9,0x9F8E,0x0},
{0xFB1D,0x5D9,0x5B4},
{0xFB1F,0x5F2,0x5B7},
{0xFB2A,0x5E9,0x5C1},
{0xFB2B,0x5E9,0x5C2},
{0xFB2C,0xFB49,0x5C1},
{0xFB2D,0xFB49,0x5C2},
{0xFB2E,0x5D0,0x5B7},
{0xFB2F,0x5D0,0x5B8},
{0xFB30,0x5D0,0x5BC},
{0xFB31,0x5D1,0x5BC},
{0xFB32,0x5D2,0x5BC},
{0xFB33,0x5D3,0x5BC},
{0xFB34,0x5D4,0x5BC},
{0xFB35,0x5D5,0x5BC},
{0xFB36,0x5D6,0x5BC},
{0xFB38,0x5D8,0x5BC},
{0xFB39,0x5D9,0x5BC},
{0xFB3A,0x5DA,0x5BC},
{0xFB3B,0x5DB,0x5BC},
{0xFB3C,0x5DC,0x5BC},
{0xFB3E,0x5DE,0x5BC},
{0xFB40,0x5E0,0x5BC},
{0xFB41,0x5E1,0x5BC},
{0xFB43,0x5E3,0x5BC},
{0xFB44,0x5E4,0x5BC},
{0xFB46,0x5E6,0x5BC},
{0xFB47,0x5E7,0x5BC},
{0xFB48,0x5E8,0x5BC},
{0xFB49,0x5E9,0x5BC},
{0xFB4A,0x5EA,0x5BC},
{0xFB4B,0x5D5,0x5B9},
{0xFB4C,0x5D1,0x5BF},
{0xFB4D,0x5DB,0x5BF},
{0xFB4E,0x5E4,0x5BF},
{0x1109A,0x11099,0x110BA},
{0x1109C,0x1109B,0x110BA},
{0x110AB,0x110A5,0x110BA},
{0x1112E,0x11131,0x11127},
{0x1112F,0x11132,0x11127},
{0x1134B,0x11347,0x1133E},
{0x1134C,0x11347,0x11357},
{0x114BB,0x114B9,0x114BA},
{0x114BC,0x114B9,0x114B0},
{0x114BE,0x114B9,0x114BD},
{0x115BA,0x115B8,0x115AF},
{0x115BB,0x115B9,0x115AF},
{0x11938,0x11935,0x11930},
{0x1D15E,0x1D157,0x1D165},
{0x1D15F,0x1D158,0x1D165},
{0x1D160,0x1D15F,0x1D16E},
{0x1D161,0x1D15F,0x1D16F},
{0x1D162,0x1D15F,0x1D170},
{0x1D163,0x1D15F,0x1D171},
{0x1D164,0x1D15F,0x1D172},
{0x1D1BB,0x1D1B9,0x1D165},
{0x1D1BC,0x1D1BA,0x1D165},
{0x1D1BD,0x1D1BB,0x1D16E},
{0x1D1BE,0x1D1BC,0x1D16E},
{0x1D1BF,0x1D1BB,0x1D16F},
{0x1D1C0,0x1D1BC,0x1D16F},
{0x2F800,0x4E3D,0x0},
{0x2F801,0x4E38,0x0},
{0x2F802,0x4E41,0x0},
{0x2F803,0x20122,0x0},
{0x2F804,0x4F60,0x0},
{0x2F805,0x4FAE,0x0},
{0x2F806,0x4FBB,0x0},
{0x2F807,0x5002,0x0},
{0x2F808,0x507A,0x0},
{0x2F809,0x5099,0x0},
{0x2F80A,0x50E7,0x0},
{0x2F80B,0x50CF,0x0},
{0x2F80C,0x349E,0x0},
{0x2F80D,0x2063A,0x0},
{0x2F80E,0x514D,0x0},
{0x2F80F,0x5154,0x0},
{0x2F810,0x5164,0x0},
{0x2F811,0x5177,0x0},
{0x2F812,0x2051C,0x0},
{0x2F813,0x34B9,0x0},
{0x2F814,0x5167,0x0},
{0x2F815,0x518D,0x0},
{0x2F816,0x2054B,0x0},
{0x2F817,0x5197,0x0},
{0x2F818,0x51A4,0x0},
{0x2F819,0x4ECC,0x0},
{0x2F81A,0x51AC,0x0},
{0x2F81B,0x51B5,0x0},
{0x2F81C,0x291DF,0x0},
{0x2F81D,0x51F5,0x0},
{0x2F81E,0x5203,0x0},
{0x2F81F,0x34DF,0x0},
{0x2F820,0x523B,0x0},
{0x2F821,0x5246,0x0},
{0x2F822,0x5272,0x0},
{0x2F823,0x5277,0x0},
{0x2F824,0x3515,0x0},
{0x2F825,0x52C7,0x0},
{0x2F826,0x52C9,0x0},
{0x2F827,0x52E4,0x0},
{0x2F828,0x52FA,0x0},
{0x2F829,0x5305,0x0},
{0x2F82A,0x5306,0x0},
{0x2F82B,0x5317,0x0},
{0x2F82C,0x5349,0x0},
{0x2F82D,0x5351,0x0},
{0x2F82E,0x535A,0x0},
{0x2F82F,0x5373,0x0},
{0x2F830,0x537D,0x0},
{0x2F831,0x537F,0x0},
{0x2F832,0x537F,0x0},
{0x2F833,0x537F,0x0},
{0x2F834,0x20A2C,0x0},
{0x2F835,0x7070,0x0},
{0x2F836,0x53CA,0x0},
{0x2F837,0x53DF,0x0},
{0x2F838,0x20B63,0x0},
{0x2F839,0x53EB,0x0},
{0x2F83A,0x53F1,0x0},
{0x2F83B,0x5406,0x0},
{0x2F83C,0x549E,0x0},
{0x2F83D,0x5438,0x0},
{0x2F83E,0x5448,0x0},
{0x2F83F,0x5468,0x0},
{0x2F840,0x54A2,0x0},
{0x2F841,0x54F6,0x0},
{0x2F842,0x5510,0x0},
{0x2F843,0x5553,0x0},
{0x2F844,0x5563,0x0},
{0x2F845,0x5584,0x0},
{0x2F846,0x5584,0x0},
{0x2F847,0x5599,0x0},
{0x2F848,0x55AB,0x0},
{0x2F849,0x55B3,0x0},
{0x2F84A,0x55C2,0x0},
{0x2F84B,0x5716,0x0},
{0x2F84C,0x5606,0x0},
{0x2F84D,0x5717,0x0},
{0x2F84E,0x5651,0x0},
{0x2F84F,0x5674,0x0},
{0x2F850,0x5207,0x0},
{0x2F851,0x58EE,0x0},
{0x2F852,0x57CE,0x0},
{0x2F853,0x57F4,0x0},
{0x2F854,0x580D,0x0},
{0x2F855,0x578B,0x0},
{0x2F856,0x5832,0x0},
{0x2F857,0x5831,0x0},
{0x2F858,0x58AC,0x0},
{0x2F859,0x214E4,0x0},
{0x2F85A,0x58F2,0x0},
{0x2F85B,0x58F7,0x0},
{0x2F85C,0x5906,0x0},
{0x2F85D,0x591A,0x0},
{0x2F85E,0x5922,0x0},
{0x2F85F,0x5962,0x0},
{0x2F860,0x216A8,0x0},
{0x2F861,0x216EA,0x0},
{0x2F862,0x59EC,0x0},
{0x2F863,0x5A1B,0x0},
{0x2F864,0x5A27,0x0},
{0x2F865,0x59D8,0x0},
{0x2F866,0x5A66,0x0},
{0x2F867,0x36EE,0x0},
{0x2F868,0x36FC,0x0},
{0x2F869,0x5B08,0x0},
{0x2F86A,0x5B3E,0x0},
{0x2F86B,0x5B3E,0x0},
{0x2F86C,0x219C8,0x0},
{0x2F86D,0x5BC3,0x0},
{0x2F86E,0x5BD8,0x0},
{0x2F86F,0x5BE7,0x0},
{0x2F870,0x5BF3,0x0},
{0x2F871,0x21B18,0x0},
{0x2F872,0x5BFF,0x0},
{0x2F873,0x5C06,0x0},
{0x2F874,0x5F53,0x0},
{0x2F875,0x5C22,0x0},
{0x2F876,0x3781,0x0},
{0x2F877,0x5C60,0x0},
{0x2F878,0x5C6E,0x0},
{0x2F879,0x5CC0,0x0},
{0x2F87A,0x5C8D,0x0},
{0x2F87B,0x21DE4,0x0},
{0x2F87C,0x5D43,0x0},
{0x2F87D,0x21DE6,0x0},
{0x2F87E,0x5D6E,0x0},
{0x2F87F,0x5D6B,0x0},
{0x2F880,0x5D7C,0x0},
{0x2F881,0x5DE1,0x0},
{0x2F882,0x5DE2,0x0},
{0x2F883,0x382F,0x0},
{0x2F884,0x5DFD,0x0},
{0x2F885,0x5E28,0x0},
{0x2F886,0x5E3D,0x0},
{0x2F887,0x5E69,0x0},
{0x2F888,0x3862,0x0},
{0x2F889,0x22183,0x0},
{0x2F88A,0x387C,0x0},
{0x2F88B,0x5EB0,0x0},
{0x2F88C,0x5EB3,0x0},
{0x2F88D,0x5EB6,0x0},
{0x2F88E,0x5ECA,0x0},
{0x2F88F,0x2A392,0x0},
{0x2F890,0x5EFE,0x0},
{0x2F891,0x22331,0x0},
{0x2F892,0x22331,0x0},
{0x2F893,0x8201,0x0},
{0x2F894,0x5F22,0x0},
{0x2F895,0x5F22,0x0},
{0x2F896,0x38C7,0x0},
{0x2F897,0x232B8,0x0},
{0x2F898,0x261DA,0x0},
{0x2F899,0x5F62,0x0},
{0x2F89A,0x5F6B,0x0},
{0x2F89B,0x38E3,0x0},
{0x2F89C,0x5F9A,0x0},
{0x2F89D,0x5FCD,0x0},
{0x2F89E,0x5FD7,0x0},
{0x2F89F,0x5FF9,0x0},
{0x2F8A0,0x6081,0x0},
{0x2F8A1,0x393A,0x0},
{0x2F8A2,0x391C,0x0},
{0x2F8A3,0x6094,0x0},
{0x2F8A4,0x226D4,0x0},
{0x2F8A5,0x60C7,0x0},
{0x2F8A6,0x6148,0x0},
{0x2F8A7,0x614C,0x0},
{0x2F8A8,0x614E,0x0},
{0x2F8A9,0x614C,0x0},
{0x2F8AA,0x617A,0x0},
{0x2F8AB,0x618E,0x0},
{0x2F8AC,0x61B2,0x0},
{0x2F8AD,0x61A4,0x0},
{0x2F8AE,0x61AF,0x0},
{0x2F8AF,0x61DE,0x0},
{0x2F8B0,0x61F2,0x0},
{0x2F8B1,0x61F6,0x0},
{0x2F8B2,0x6210,0x0},
{0x2F8B3,0x621B,0x0},
{0x2F8B4,0x625D,0x0},
{0x2F8B5,0x62B1,0x0},
{0x2F8B6,0x62D4,0x0},
{0x2F8B7,0x6350,0x0},
{0x2F8B8,0x22B0C,0x0},
{0x2F8B9,0x633D,0x0},
{0x2F8BA,0x62FC,0x0},
{0x2F8BB,0x6368,0x0},
{0x2F8BC,0x6383,0x0},
{0x2F8BD,0x63E4,0x0},
{0x2F8BE,0x22BF1,0x0},
{0x2F8BF,0x6422,0x0},
{0x2F8C0,0x63C5,0x0},
{0x2F8C1,0x63A9,0x0},
{0x2F8C2,0x3A2E,0x0},
{0x2F8C3,0x6469,0x0},
{0x2F8C4,0x647E,0x0},
{0x2F8C5,0x649D,0x0},
{0x2F8C6,0x6477,0x0},
{0x2F8C7,0x3A6C,0x0},
{0x2F8C8,0x654F,0x0},
{0x2F8C9,0x656C,0x0},
{0x2F8CA,0x2300A,0x0},
{0x2F8CB,0x65E3,0x0},
{0x2F8CC,0x66F8,0x0},
{0x2F8CD,0x6649,0x0},
{0x2F8CE,0x3B19,0x0},
{0x2F8CF,0x6691,0x0},
{0x2F8D0,0x3B08,0x0},
{0x2F8D1,0x3AE4,0x0},
{0x2F8D2,0x5192,0x0},
{0x2F8D3,0x5195,0x0},
{0x2F8D4,0x6700,0x0},
{0x2F8D5,0x669C,0x0},
{0x2F8D6,0x80AD,0x0},
{0x2F8D7,0x43D9,0x0},
{0x2F8D8,0x6717,0x0},
{0x2F8D9,0x671B,0x0},
{0x2F8DA,0x6721,0x0},
{0x2F8DB,0x675E,0x0},
{0x2F8DC,0x6753,0x0},
{0x2F8DD,0x233C3,0x0},
{0x2F8DE,0x3B49,0x0},
{0x2F8DF,0x67FA,0x0},
{0x2F8E0,0x6785,0x0},
{0x2F8E1,0x6852,0x0},
{0x2F8E2,0x6885,0x0},
{0x2F8E3,0x2346D,0x0},
{0x2F8E4,0x688E,0x0},
{0x2F8E5,0x681F,0x0},
{0x2F8E6,0x6914,0x0},
{0x2F8E7,0x3B9D,0x0},
{0x2F8E8,0x6942,0x0},
{0x2F8E9,0x69A3,0x0},
{0x2F8EA,0x69EA,0x0},
{0x2F8EB,0x6AA8,0x0},
{0x2F8EC,0x236A3,0x0},
{0x2F8ED,0x6ADB,0x0},
{0x2F8EE,0x3C18,0x0},
{0x2F8EF,0x6B21,0x0},
{0x2F8F0,0x238A7,0x0},
{0x2F8F1,0x6B54,0x0},
{0x2F8F2,0x3C4E,0x0},
{0x2F8F3,0x6B72,0x0},
{0x2F8F4,0x6B9F,0x0},
{0x2F8F5,0x6BBA,0x0},
{0x2F8F6,0x6BBB,0x0},
{0x2F8F7,0x23A8D,0x0},
{0x2F8F8,0x21D0B,0x0},
{0x2F8F9,0x23AFA,0x0},
{0x2F8FA,0x6C4E,0x0},
{0x2F8FB,0x23CBC,0x0},
{0x2F8FC,0x6CBF,0x0},
{0x2F8FD,0x6CCD,0x0},
{0x2F8FE,0x6C67,0x0},
{0x2F8FF,0x6D16,0x0},
{0x2F900,0x6D3E,0x0},
{0x2F901,0x6D77,0x0},
{0x2F902,0x6D41,0x0},
{0x2F903,0x6D69,0x0},
{0x2F904,0x6D78,0x0},
{0x2F905,0x6D85,0x0},
{0x2F906,0x23D1E,0x0},
{0x2F907,0x6D34,0x0},
{0x2F908,0x6E2F,0x0},
{0x2F909,0x6E6E,0x0},
{0x2F90A,0x3D33,0x0},
{0x2F90B,0x6ECB,0x0},
{0x2F90C,0x6EC7,0x0},
{0x2F90D,0x23ED1,0x0},
{0x2F90E,0x6DF9,0x0},
{0x2F90F,0x6F6E,0x0},
{0x2F910,0x23F5E,0x0},
{0x2F911,0x23F8E,0x0},
{0x2F912,0x6FC6,0x0},
{0x2F913,0x7039,0x0},
{0x2F914,0x701E,0x0},
{0x2F915,0x701B,0x0},
{0x2F916,0x3D96,0x0},
{0x2F917,0x704A,0x0},
{0x2F918,0x707D,0x0},
{0x2F919,0x7077,0x0},
{0x2F91A,0x70AD,0x0},
{0x2F91B,0x20525,0x0},
{0x2F91C,0x7145,0x0},
{0x2F91D,0x24263,0x0},
{0x2F91E,0x719C,0x0},
{0x2F91F,0x243AB,0x0},
{0x2F920,0x7228,0x0},
{0x2F921,0x7235,0x0},
{0x2F922,0x7250,0x0},
{0x2F923,0x24608,0x0},
{0x2F924,0x7280,0x0},
{0x2F925,0x7295,0x0},
{0x2F926,0x24735,0x0},
{0x2F927,0x24814,0x0},
{0x2F928,0x737A,0x0},
{0x2F929,0x738B,0x0},
{0x2F92A,0x3EAC,0x0},
{0x2F92B,0x73A5,0x0},
{0x2F92C,0x3EB8,0x0},
{0x2F92D,0x3EB8,0x0},
{0x2F92E,0x7447,0x0},
{0x2F92F,0x745C,0x0},
{0x2F930,0x7471,0x0},
{0x2F931,0x7485,0x0},
{0x2F932,0x74CA,0x0},
{0x2F933,0x3F1B,0x0},
{0x2F934,0x7524,0x0},
{0x2F935,0x24C36,0x0},
{0x2F936,0x753E,0x0},
{0x2F937,0x24C92,0x0},
{0x2F938,0x7570,0x0},
{0x2F939,0x2219F,0x0},
{0x2F93A,0x7610,0x0},
{0x2F93B,0x24FA1,0x0},
{0x2F93C,0x24FB8,0x0},
{0x2F93D,0x25044,0x0},
{0x2F93E,0x3FFC,0x0},
{0x2F93F,0x4008,0x0},
{0x2F940,0x76F4,0x0},
{0x2F941,0x250F3,0x0},
{0x2F942,0x250F2,0x0},
{0x2F943,0x25119,0x0},
{0x2F944,0x25133,0x0},
{0x2F945,0x771E,0x0},
{0x2F946,0x771F,0x0},
{0x2F947,0x771F,0x0},
{0x2F948,0x774A,0x0},
{0x2F949,0x4039,0x0},
{0x2F94A,0x778B,0x0},
{0x2F94B,0x4046,0x0},
{0x2F94C,0x4096,0x0},
{0x2F94D,0x2541D,0x0},
{0x2F94E,0x784E,0x0},
{0x2F94F,0x788C,0x0},
{0x2F950,0x78CC,0x0},
{0x2F951,0x40E3,0x0},
{0x2F952,0x25626,0x0},
{0x2F953,0x7956,0x0},
{0x2F954,0x2569A,0x0},
{0x2F955,0x256C5,0x0},
{0x2F956,0x798F,0x0},
{0x2F957,0x79EB,0x0},
{0x2F958,0x412F,0x0},
{0x2F959,0x7A40,0x0},
{0x2F95A,0x7A4A,0x0},
{0x2F95B,0x7A4F,0x0},
{0x2F95C,0x2597C,0x0},
{0x2F95D,0x25AA7,0x0},
{0x2F95E,0x25AA7,0x0},
{0x2F95F,0x7AEE,0x0},
{0x2F960,0x4202,0x0},
{0x2F961,0x25BAB,0x0},
{0x2F962,0x7BC6,0x0},
{0x2F963,0x7BC9,0x0},
{0x2F964,0x4227,0x0},
{0x2F965,0x25C80,0x0},
{0x2F966,0x7CD2,0x0},
{0x2F967,0x42A0,0x0},
{0x2F968,0x7CE8,0x0},
{0x2F969,0x7CE3,0x0},
{0x2F96A,0x7D00,0x0},
{0x2F96B,0x25F86,0x0},
{0x2F96C,0x7D63,0x0},
{0x2F96D,0x4301,0x0},
{0x2F96E,0x7DC7,0x0},
{0x2F96F,0x7E02,0x0},
{0x2F970,0x7E45,0x0},
{0x2F971,0x4334,0x0},
{0x2F972,0x26228,0x0},
{0x2F973,0x26247,0x0},
{0x2F974,0x4359,0x0},
{0x2F975,0x262D9,0x0},
{0x2F976,0x7F7A,0x0},
{0x2F977,0x2633E,0x0},
{0x2F978,0x7F95,0x0},
{0x2F979,0x7FFA,0x0},
{0x2F97A,0x8005,0x0},
{0x2F97B,0x264DA,0x0},
{0x2F97C,0x26523,0x0},
{0x2F97D,0x8060,0x0},
{0x2F97E,0x265A8,0x0},
{0x2F97F,0x8070,0x0},
{0x2F980,0x2335F,0x0},
{0x2F981,0x43D5,0x0},
{0x2F982,0x80B2,0x0},
{0x2F983,0x8103,0x0},
{0x2F984,0x440B,0x0},
{0x2F985,0x813E,0x0},
{0x2F986,0x5AB5,0x0},
{0x2F987,0x267A7,0x0},
{0x2F988,0x267B5,0x0},
{0x2F989,0x23393,0x0},
{0x2F98A,0x2339C,0x0},
{0x2F98B,0x8201,0x0},
{0x2F98C,0x8204,0x0},
{0x2F98D,0x8F9E,0x0},
{0x2F98E,0x446B,0x0},
{0x2F98F,0x8291,0x0},
{0x2F990,0x828B,0x0},
{0x2F991,0x829D,0x0},
{0x2F992,0x52B3,0x0},
{0x2F993,0x82B1,0x0},
{0x2F994,0x82B3,0x0},
{0x2F995,0x82BD,0x0},
{0x2F996,0x82E6,0x0},
{0x2F997,0x26B3C,0x0},
{0x2F998,0x82E5,0x0},
{0x2F999,0x831D,0x0},
{0x2F99A,0x8363,0x0},
{0x2F99B,0x83AD,0x0},
{0x2F99C,0x8323,0x0},
{0x2F99D,0x83BD,0x0},
{0x2F99E,0x83E7,0x0},
{0x2F99F,0x8457,0x0},
{0x2F9A0,0x8353,0x0},
{0x2F9A1,0x83CA,0x0},
{0x2F9A2,0x83CC,0x0},
{0x2F9A3,0x83DC,0x0},
{0x2F9A4,0x26C36,0x0},
{0x2F9A5,0x26D6B,0x0},
{0x2F9A6,0x26CD5,0x0},
{0x2F9A7,0x452B,0x0},
{0x2F9A8,0x84F1,0x0},
{0x2F9A9,0x84F3,0x0},
{0x2F9AA,0x8516,0x0},
{0x2F9AB,0x273CA,0x0},
{0x2F9AC,0x8564,0x0},
{0x2F9AD,0x26F2C,0x0},
{0x2F9AE,0x455D,0x0},
{0x2F9AF,0x4561,0x0},
{0x2F9B0,0x26FB1,0x0},
{0x2F9B1,0x270D2,0x0},
{0x2F9B2,0x456B,0x0},
{0x2F9B3,0x8650,0x0},
{0x2F9B4,0x865C,0x0},
{0x2F9B5,0x8667,0x0},
{0x2F9B6,0x8669,0x0},
{0x2F9B7,0x86A9,0x0},
{0x2F9B8,0x8688,0x0},
{0x2F9B9,0x870E,0x0},
{0x2F9BA,0x86E2,0x0},
{0x2F9BB,0x8779,0x0},
{0x2F9BC,0x8728,0x0},
{0x2F9BD,0x876B,0x0},
{0x2F9BE,0x8786,0x0},
{0x2F9BF,0x45D7,0x0},
{0x2F9C0,0x87E1,0x0},
{0x2F9C1,0x8801,0x0},
{0x2F9C2,0x45F9,0x0},
{0x2F9C3,0x8860,0x0},
{0x2F9C4,0x8863,0x0},
{0x2F9C5,0x27667,0x0},
{0x2F9C6,0x88D7,0x0},
{0x2F9C7,0x88DE,0x0},
{0x2F9C8,0x4635,0x0},
{0x2F9C9,0x88FA,0x0},
{0x2F9CA,0x34BB,0x0},
{0x2F9CB,0x278AE,0x0},
{0x2F9CC,0x27966,0x0},
{0x2F9CD,0x46BE,0x0},
{0x2F9CE,0x46C7,0x0},
{0x2F9CF,0x8AA0,0x0},
{0x2F9D0,0x8AED,0x0},
{0x2F9D1,0x8B8A,0x0},
{0x2F9D2,0x8C55,0x0},
{0x2F9D3,0x27CA8,0x0},
{0x2F9D4,0x8CAB,0x0},
{0x2F9D5,0x8CC1,0x0},
{0x2F9D6,0x8D1B,0x0},
{0x2F9D7,0x8D77,0x0},
{0x2F9D8,0x27F2F,0x0},
{0x2F9D9,0x20804,0x0},
{0x2F9DA,0x8DCB,0x0},
{0x2F9DB,0x8DBC,0x0},
{0x2F9DC,0x8DF0,0x0},
{0x2F9DD,0x208DE,0x0},
{0x2F9DE,0x8ED4,0x0},
{0x2F9DF,0x8F38,0x0},
{0x2F9E0,0x285D2,0x0},
{0x2F9E1,0x285ED,0x0},
{0x2F9E2,0x9094,0x0},
{0x2F9E3,0x90F1,0x0},
{0x2F9E4,0x9111,0x0},
{0x2F9E5,0x2872E,0x0},
{0x2F9E6,0x911B,0x0},
{0x2F9E7,0x9238,0x0},
{0x2F9E8,0x92D7,0x0},
{0x2F9E9,0x92D8,0x0},
{0x2F9EA,0x927C,0x0},
{0x2F9EB,0x93F9,0x0},
{0x2F9EC,0x9415,0x0},
{0x2F9ED,0x28BFA,0x0},
{0x2F9EE,0x958B,0x0},
{0x2F9EF,0x4995,0x0},
{0x2F9F0,0x95B7,0x0},
{0x2F9F1,0x28D77,0x0},
{0x2F9F2,0x49E6,0x0},
{0x2F9F3,0x96C3,0x0},
{0x2F9F4,0x5DB2,0x0},
{0x2F9F5,0x9723,0x0},
{0x2F9F6,0x29145,0x0},
{0x2F9F7,0x2921A,0x0},
{0x2F9F8,0x4A6E,0x0},
{0x2F9F9,0x4A76,0x0},
{0x2F9FA,0x97E0,0x0},
{0x2F9FB,0x2940A,0x0},
{0x2F9FC,0x4AB2,0x0},
{0x2F9FD,0x29496,0x0},
{0x2F9FE,0x980B,0x0},
{0x2F9FF,0x980B,0x0},
{0x2FA00,0x9829,0x0},
{0x2FA01,0x295B6,0x0},
{0x2FA02,0x98E2,0x0},
{0x2FA03,0x4B33,0x0},
{0x2FA04,0x9929,0x0},
{0x2FA05,0x99A7,0x0},
{0x2FA06,0x99C2,0x0},
{0x2FA07,0x99FE,0x0},
{0x2FA08,0x4BCE,0x0},
{0x2FA09,0x29B30,0x0},
{0x2FA0A,0x9B12,0x0},
{0x2FA0B,0x9C40,0x0},
{0x2FA0C,0x9CFD,0x0},
{0x2FA0D,0x4CCE,0x0},
{0x2FA0E,0x4CED,0x0},
{0x2FA0F,0x9D67,0x0},
{0x2FA10,0x2A0CE,0x0},
{0x2FA11,0x4CF8,0x0},
{0x2FA12,0x2A105,0x0},
{0x2FA13,0x2A20E,0x0},
{0x2FA14,0x2A291,0x0},
{0x2FA15,0x9EBB,0x0},
{0x2FA16,0x4D56,0x0},
{0x2FA17,0x9EF9,0x0},
{0x2FA18,0x9EFE,0x0},
{0x2FA19,0x9F05,0x0},
{0x2FA1A,0x9F0F,0x0},
{0x2FA1B,0x9F16,0x0},
{0x2FA1C,0x9F3B,0x0},
{0x2FA1D,0x2A600,0x0},
};
inline constexpr size_t kDecompositionCount = 2061;

// (first << 21) | second, sorted; parallel composite table
inline constexpr uint64_t kCompositionKey[] = {
0x000007800338ull,0x000007A00338ull,0x000007C00338ull,0x000008200300ull,0x000008200301ull,0x000008200302ull,
0x000008200303ull,0x000008200304ull,0x000008200306ull,0x000008200307ull,0x000008200308ull,0x000008200309ull,
0x00000820030Aull,0x00000820030Cull,0x00000820030Full,0x000008200311ull,0x000008200323ull,0x000008200325ull,
0x000008200328ull,0x000008400307ull,0x000008400323ull,0x000008400331ull,0x000008600301ull,0x000008600302ull,
0x000008600307ull,0x00000860030Cull,0x000008600327ull,0x000008800307ull,0x00000880030Cull,0x000008800323ull,
0x000008800327ull,0x00000880032Dull,0x000008800331ull,0x000008A00300ull,0x000008A00301ull,0x000008A00302ull,
0x000008A00303ull,0x000008A00304ull,0x000008A00306ull,0x000008A00307ull,0x000008A00308ull,0x000008A00309ull,
0x000008A0030Cull,0x000008A0030Full,0x000008A00311ull,0x000008A00323ull,0x000008A00327ull,0x000008A00328ull,
0x000008A0032Dull,0x000008A00330ull,0x000008C00307ull,0x000008E00301ull,0x000008E00302ull,0x000008E00304ull,
0x000008E00306ull,0x000008E00307ull,0x000008E0030Cull,0x000008E00327ull,0x000009000302ull,0x000009000307ull,
0x000009000308ull,0x00000900030Cull,0x000009000323ull,0x000009000327ull,0x00000900032Eull,0x000009200300ull,
0x000009200301ull,0x000009200302ull,0x000009200303ull,0x000009200304ull,0x000009200306ull,0x000009200307ull,
0x000009200308ull,0x000009200309ull,0x00000920030Cull,0x00000920030Full,0x000009200311ull,0x000009200323ull,
0x000009200328ull,0x000009200330ull,0x000009400302ull,0x000009600301ull,0x00000960030Cull,0x000009600323ull,
0x000009600327ull,0x000009600331ull,0x000009800301ull,0x00000980030Cull,0x000009800323ull,0x000009800327ull,
0x00000980032Dull,0x000009800331ull,0x000009A00301ull,0x000009A00307ull,0x000009A00323ull,0x000009C00300ull,
0x000009C00301ull,0x000009C00303ull,0x000009C00307ull,0x000009C0030Cull,0x000009C00323ull,0x000009C00327ull,
0x000009C0032Dull,0x000009C00331ull,0x000009E00300ull,0x000009E00301ull,0x000009E00302ull,0x000009E00303ull,
0x000009E00304ull,0x000009E00306ull,0x000009E00307ull,0x000009E00308ull,0x000009E00309ull,0x000009E0030Bull,
0x000009E0030Cull,0x000009E0030Full,0x000009E00311ull,0x000009E0031Bull,0x000009E00323ull,0x000009E00328ull,
0x00000A000301ull,0x00000A000307ull,0x00000A400301ull,0x00000A400307ull,0x00000A40030Cull,0x00000A40030Full,
0x00000A400311ull,0x00000A400323ull,0x00000A400327ull,0x00000A400331ull,0x00000A600301ull,0x00000A600302ull,
0x00000A600307ull,0x00000A60030Cull,0x00000A600323ull,0x00000A600326ull,0x00000A600327ull,0x00000A800307ull,
0x00000A80030Cull,0x00000A800323ull,0x00000A800326ull,0x00000A800327ull,0x00000A80032Dull,0x00000A800331ull,
0x00000AA00300ull,0x00000AA00301ull,0x00000AA00302ull,0x00000AA00303ull,0x00000AA00304ull,0x00000AA00306ull,
0x00000AA00308ull,0x00000AA00309ull,0x00000AA0030Aull,0x00000AA0030Bull,0x00000AA0030Cull,0x00000AA0030Full,
0x00000AA00311ull,0x00000AA0031Bull,0x00000AA00323ull,0x00000AA00324ull,0x00000AA00328ull,0x00000AA0032Dull,
0x00000AA00330ull,0x00000AC00303ull,0x00000AC00323ull,0x00000AE00300ull,0x00000AE00301ull,0x00000AE00302ull,
0x00000AE00307ull,0x00000AE00308ull,0x00000AE00323ull,0x00000B000307ull,0x00000B000308ull,0x00000B200300ull,
0x00000B200301ull,0x00000B200302ull,0x00000B200303ull,0x00000B200304ull,0x00000B200307ull,0x00000B200308ull,
0x00000B200309ull,0x00000B200323ull,0x00000B400301ull,0x00000B400302ull,0x00000B400307ull,0x00000B40030Cull,
0x00000B400323ull,0x00000B400331ull,0x00000C200300ull,0x00000C200301ull,0x00000C200302ull,0x00000C200303ull,
0x00000C200304ull,0x00000C200306ull,0x00000C200307ull,0x00000C200308ull,0x00000C200309ull,0x00000C20030Aull,
0x00000C20030Cull,0x00000C20030Full,0x00000C200311ull,0x00000C200323ull,0x00000C200325ull,0x00000C200328ull,
0x00000C400307ull,0x00000C400323ull,0x00000C400331ull,0x00000C600301ull,0x00000C600302ull,0x00000C600307ull,
0x00000C60030Cull,0x00000C600327ull,0x00000C800307ull,0x00000C80030Cull,0x00000C800323ull,0x00000C800327ull,
0x00000C80032Dull,0x00000C800331ull,0x00000CA00300ull,0x00000CA00301ull,0x00000CA00302ull,0x00000CA00303ull,
0x00000CA00304ull,0x00000CA00306ull,0x00000CA00307ull,0x00000CA00308ull,0x00000CA00309ull,0x00000CA0030Cull,
0x00000CA0030Full,0x00000CA00311ull,0x00000CA00323ull,0x00000CA00327ull,0x00000CA00328ull,0x00000CA0032Dull,
0x00000CA00330ull,0x00000CC00307ull,0x00000CE00301ull,0x00000CE00302ull,0x00000CE00304ull,0x00000CE00306ull,
0x00000CE00307ull,0x00000CE0030Cull,0x00000CE00327ull,0x00000D000302ull,0x00000D000307ull,0x00000D000308ull,
0x00000D00030Cull,0x00000D000323ull,0x00000D000327ull,0x00000D00032Eull,0x00000D000331ull,0x00000D200300ull,
0x00000D200301ull,0x00000D200302ull,0x00000D200303ull,0x00000D200304ull,0x00000D200306ull,0x00000D200308ull,
0x00000D200309ull,0x00000D20030Cull,0x00000D20030Full,0x00000D200311ull,0x00000D200323ull,0x00000D200328ull,
0x00000D200330ull,0x00000D400302ull,0x00000D40030Cull,0x00000D600301ull,0x00000D60030Cull,0x00000D600323ull,
0x00000D600327ull,0x00000D600331ull,0x00000D800301ull,0x00000D80030Cull,0x00000D800323ull,0x00000D800327ull,
0x00000D80032Dull,0x00000D800331ull,0x00000DA00301ull,0x00000DA00307ull,0x00000DA00323ull,0x00000DC00300ull,
0x00000DC00301ull,0x00000DC00303ull,0x00000DC00307ull,0x00000DC0030Cull,0x00000DC00323ull,0x00000DC00327ull,
0x00000DC0032Dull,0x00000DC00331ull,0x00000DE00300ull,0x00000DE00301ull,0x00000DE00302ull,0x00000DE00303ull,
0x00000DE00304ull,0x00000DE00306ull,0x00000DE00307ull,0x00000DE00308ull,0x00000DE00309ull,0x00000DE0030Bull,
0x00000DE0030Cull,0x00000DE0030Full,0x00000DE00311ull,0x00000DE0031Bull,0x00000DE00323ull,0x00000DE00328ull,
0x00000E000301ull,0x00000E000307ull,0x00000E400301ull,0x00000E400307ull,0x00000E40030Cull,0x00000E40030Full,
0x00000E400311ull,0x00000E400323ull,0x00000E400327ull,0x00000E400331ull,0x00000E600301ull,0x00000E600302ull,
0x00000E600307ull,0x00000E60030Cull,0x00000E600323ull,0x00000E600326ull,0x00000E600327ull,0x00000E800307ull,
0x00000E800308ull,0x00000E80030Cull,0x00000E800323ull,0x00000E800326ull,0x00000E800327ull,0x00000E80032Dull,
0x00000E800331ull,0x00000EA00300ull,0x00000EA00301ull,0x00000EA00302ull,0x00000EA00303ull,0x00000EA00304ull,
0x00000EA00306ull,0x00000EA00308ull,0x00000EA00309ull,0x00000EA0030Aull,0x00000EA0030Bull,0x00000EA0030Cull,
0x00000EA0030Full,0x00000EA00311ull,0x00000EA0031Bull,0x00000EA00323ull,0x00000EA00324ull,0x00000EA00328ull,
0x00000EA0032Dull,0x00000EA00330ull,0x00000EC00303ull,0x00000EC00323ull,0x00000EE00300ull,0x00000EE00301ull,
0x00000EE00302ull,0x00000EE00307ull,0x00000EE00308ull,0x00000EE0030Aull,0x00000EE00323ull,0x00000F000307ull,
0x00000F000308ull,0x00000F200300ull,0x00000F200301ull,0x00000F200302ull,0x00000F200303ull,0x00000F200304ull,
0x00000F200307ull,0x00000F200308ull,0x00000F200309ull,0x00000F20030Aull,0x00000F200323ull,0x00000F400301ull,
0x00000F400302ull,0x00000F400307ull,0x00000F40030Cull,0x00000F400323ull,0x00000F400331ull,0x000015000300ull,
0x000015000301ull,0x000015000342ull,0x000018400300ull,0x000018400301ull,0x000018400303ull,0x000018400309ull,
0x000018800304ull,0x000018A00301ull,0x000018C00301ull,0x000018C00304ull,0x000018E00301ull,0x000019400300ull,
0x000019400301ull,0x000019400303ull,0x000019400309ull,0x000019E00301ull,0x00001A800300ull,0x00001A800301ull,
0x00001A800303ull,0x00001A800309ull,0x00001AA00301ull,0x00001AA00304ull,0x00001AA00308ull,0x00001AC00304ull,
0x00001B000301ull,0x00001B800300ull,0x00001B800301ull,0x00001B800304ull,0x00001B80030Cull,0x00001C400300ull,
0x00001C400301ull,0x00001C400303ull,0x00001C400309ull,0x00001C800304ull,0x00001CA00301ull,0x00001CC00301ull,
0x00001CC00304ull,0x00001CE00301ull,0x00001D400300ull,0x00001D400301ull,0x00001D400303ull,0x00001D400309ull,
0x00001DE00301ull,0x00001E800300ull,0x00001E800301ull,0x00001E800303ull,0x00001E800309ull,0x00001EA00301ull,
0x00001EA00304ull,0x00001EA00308ull,0x00001EC00304ull,0x00001F000301ull,0x00001F800300ull,0x00001F800301ull,
0x00001F800304ull,0x00001F80030Cull,0x000020400300ull,0x000020400301ull,0x000020400303ull,0x000020400309ull,
0x000020600300ull,0x000020600301ull,0x000020600303ull,0x000020600309ull,0x000022400300ull,0x000022400301ull,
0x000022600300ull,0x000022600301ull,0x000029800300ull,0x000029800301ull,0x000029A00300ull,0x000029A00301ull,
0x00002B400307ull,0x00002B600307ull,0x00002C000307ull,0x00002C200307ull,0x00002D000301ull,0x00002D200301ull,
0x00002D400308ull,0x00002D600308ull,0x00002FE00307ull,0x000034000300ull,0x000034000301ull,0x000034000303ull,
0x000034000309ull,0x000034000323ull,0x000034200300ull,0x000034200301ull,0x000034200303ull,0x000034200309ull,
0x000034200323ull,0x000035E00300ull,0x000035E00301ull,0x000035E00303ull,0x000035E00309ull,0x000035E00323ull,
0x000036000300ull,0x000036000301ull,0x000036000303ull,0x000036000309ull,0x000036000323ull,0x000036E0030Cull,
0x00003D400304ull,0x00003D600304ull,0x000044C00304ull,0x000044E00304ull,0x000045000306ull,0x000045200306ull,
0x000045C00304ull,0x000045E00304ull,0x00005240030Cull,0x000072200300ull,0x000072200301ull,0x000072200304ull,
0x000072200306ull,0x000072200313ull,0x000072200314ull,0x000072200345ull,0x000072A00300ull,0x000072A00301ull,
0x000072A00313ull,0x000072A00314ull,0x000072E00300ull,0x000072E00301ull,0x000072E00313ull,0x000072E00314ull,
0x000072E00345ull,0x000073200300ull,0x000073200301ull,0x000073200304ull,0x000073200306ull,0x000073200308ull,
0x000073200313ull,0x000073200314ull,0x000073E00300ull,0x000073E00301ull,0x000073E00313ull,0x000073E00314ull,
0x000074200314ull,0x000074A00300ull,0x000074A00301ull,0x000074A00304ull,0x000074A00306ull,0x000074A00308ull,
0x000074A00314ull,0x000075200300ull,0x000075200301ull,0x000075200313ull,0x000075200314ull,0x000075200345ull,
0x000075800345ull,0x000075C00345ull,0x000076200300ull,0x000076200301ull,0x000076200304ull,0x000076200306ull,
0x000076200313ull,0x000076200314ull,0x000076200342ull,0x000076200345ull,0x000076A00300ull,0x000076A00301ull,
0x000076A00313ull,0x000076A00314ull,0x000076E00300ull,0x000076E00301ull,0x000076E00313ull,0x000076E00314ull,
0x000076E00342ull,0x000076E00345ull,0x000077200300ull,0x000077200301ull,0x000077200304ull,0x000077200306ull,
0x000077200308ull,0x000077200313ull,0x000077200314ull,0x000077200342ull,0x000077E00300ull,0x000077E00301ull,
0x000077E00313ull,0x000077E00314ull,0x000078200313ull,0x000078200314ull,0x000078A00300ull,0x000078A00301ull,
0x000078A00304ull,0x000078A00306ull,0x000078A00308ull,0x000078A00313ull,0x000078A00314ull,0x000078A00342ull,
0x000079200300ull,0x000079200301ull,0x000079200313ull,0x000079200314ull,0x000079200342ull,0x000079200345ull,
0x000079400300ull,0x000079400301ull,0x000079400342ull,0x000079600300ull,0x000079600301ull,0x000079600342ull,
0x000079C00345ull,0x00007A400301ull,0x00007A400308ull,0x000080C00308ull,0x000082000306ull,0x000082000308ull,
0x000082600301ull,0x000082A00300ull,0x000082A00306ull,0x000082A00308ull,0x000082C00306ull,0x000082C00308ull,
0x000082E00308ull,0x000083000300ull,0x000083000304ull,0x000083000306ull,0x000083000308ull,0x000083400301ull,
0x000083C00308ull,0x000084600304ull,0x000084600306ull,0x000084600308ull,0x00008460030Bull,0x000084E00308ull,
0x000085600308ull,0x000085A00308ull,0x000086000306ull,0x000086000308ull,0x000086600301ull,0x000086A00300ull,
0x000086A00306ull,0x000086A00308ull,0x000086C00306ull,0x000086C00308ull,0x000086E00308ull,0x000087000300ull,
0x000087000304ull,0x000087000306ull,0x000087000308ull,0x000087400301ull,0x000087C00308ull,0x000088600304ull,
0x000088600306ull,0x000088600308ull,0x00008860030Bull,0x000088E00308ull,0x000089600308ull,0x000089A00308ull,
0x00008AC00308ull,0x00008E80030Full,0x00008EA0030Full,0x00009B000308ull,0x00009B200308ull,0x00009D000308ull,
0x00009D200308ull,0x0000C4E00653ull,0x0000C4E00654ull,0x0000C4E00655ull,0x0000C9000654ull,0x0000C9400654ull,
0x0000D8200654ull,0x0000DA400654ull,0x0000DAA00654ull,0x00012500093Cull,0x00012600093Cull,0x00012660093Cull,
0x000138E009BEull,0x000138E009D7ull,0x000168E00B3Eull,0x000168E00B56ull,0x000168E00B57ull,0x000172400BD7ull,
0x000178C00BBEull,0x000178C00BD7ull,0x000178E00BBEull,0x000188C00C56ull,0x000197E00CD5ull,0x000198C00CC2ull,
0x000198C00CD5ull,0x000198C00CD6ull,0x000199400CD5ull,0x0001A8C00D3Eull,0x0001A8C00D57ull,0x0001A8E00D3Eull,
0x0001BB200DCAull,0x0001BB200DCFull,0x0001BB200DDFull,0x0001BB800DCAull,0x000204A0102Eull,0x000360A01B35ull,
0x000360E01B35ull,0x000361201B35ull,0x000361601B35ull,0x000361A01B35ull,0x000362201B35ull,0x000367401B35ull,
0x000367801B35ull,0x000367C01B35ull,0x000367E01B35ull,0x000368401B35ull,0x0003C6C00304ull,0x0003C6E00304ull,
0x0003CB400304ull,0x0003CB600304ull,0x0003CC400307ull,0x0003CC600307ull,0x0003D4000302ull,0x0003D4000306ull,
0x0003D4200302ull,0x0003D4200306ull,0x0003D7000302ull,0x0003D7200302ull,0x0003D9800302ull,0x0003D9A00302ull,
0x0003E0000300ull,0x0003E0000301ull,0x0003E0000342ull,0x0003E0000345ull,0x0003E0200300ull,0x0003E0200301ull,
0x0003E0200342ull,0x0003E0200345ull,0x0003E0400345ull,0x0003E0600345ull,0x0003E0800345ull,0x0003E0A00345ull,
0x0003E0C00345ull,0x0003E0E00345ull,0x0003E1000300ull,0x0003E1000301ull,0x0003E1000342ull,0x0003E1000345ull,
0x0003E1200300ull,0x0003E1200301ull,0x0003E1200342ull,0x0003E1200345ull,0x0003E1400345ull,0x0003E1600345ull,
0x0003E1800345ull,0x0003E1A00345ull,0x0003E1C00345ull,0x0003E1E00345ull,0x0003E2000300ull,0x0003E2000301ull,
0x0003E2200300ull,0x0003E2200301ull,0x0003E3000300ull,0x0003E3000301ull,0x0003E3200300ull,0x0003E3200301ull,
0x0003E4000300ull,0x0003E4000301ull,0x0003E4000342ull,0x0003E4000345ull,0x0003E4200300ull,0x0003E4200301ull,
0x0003E4200342ull,0x0003E4200345ull,0x0003E4400345ull,0x0003E4600345ull,0x0003E4800345ull,0x0003E4A00345ull,
0x0003E4C00345ull,0x0003E4E00345ull,0x0003E5000300ull,0x0003E5000301ull,0x0003E5000342ull,0x0003E5000345ull,
0x0003E5200300ull,0x0003E5200301ull,0x0003E5200342ull,0x0003E5200345ull,0x0003E5400345ull,0x0003E5600345ull,
0x0003E5800345ull,0x0003E5A00345ull,0x0003E5C00345ull,0x0003E5E00345ull,0x0003E6000300ull,0x0003E6000301ull,
0x0003E6000342ull,0x0003E6200300ull,0x0003E6200301ull,0x0003E6200342ull,0x0003E7000300ull,0x0003E7000301ull,
0x0003E7000342ull,0x0003E7200300ull,0x0003E7200301ull,0x0003E7200342ull,0x0003E8000300ull,0x0003E8000301ull,
0x0003E8200300ull,0x0003E8200301ull,0x0003E9000300ull,0x0003E9000301ull,0x0003E9200300ull,0x0003E9200301ull,
0x0003EA000300ull,0x0003EA000301ull,0x0003EA000342ull,0x0003EA200300ull,0x0003EA200301ull,0x0003EA200342ull,
0x0003EB200300ull,0x0003EB200301ull,0x0003EB200342ull,0x0003EC000300ull,0x0003EC000301ull,0x0003EC000342ull,
0x0003EC000345ull,0x0003EC200300ull,0x0003EC200301ull,0x0003EC200342ull,0x0003EC200345ull,0x0003EC400345ull,
0x0003EC600345ull,0x0003EC800345ull,0x0003ECA00345ull,0x0003ECC00345ull,0x0003ECE00345ull,0x0003ED000300ull,
0x0003ED000301ull,0x0003ED000342ull,0x0003ED000345ull,0x0003ED200300ull,0x0003ED200301ull,0x0003ED200342ull,
0x0003ED200345ull,0x0003ED400345ull,0x0003ED600345ull,0x0003ED800345ull,0x0003EDA00345ull,0x0003EDC00345ull,
0x0003EDE00345ull,0x0003EE000345ull,0x0003EE800345ull,0x0003EF800345ull,0x0003F6C00345ull,0x0003F7E00300ull,
0x0003F7E00301ull,0x0003F7E00342ull,0x0003F8C00345ull,0x0003FEC00345ull,0x0003FFC00300ull,0x0003FFC00301ull,
0x0003FFC00342ull,0x000432000338ull,0x000432400338ull,0x000432800338ull,0x00043A000338ull,0x00043A400338ull,
0x00043A800338ull,0x000440600338ull,0x000441000338ull,0x000441600338ull,0x000444600338ull,0x000444A00338ull,
0x000447800338ull,0x000448600338ull,0x000448A00338ull,0x000449000338ull,0x000449A00338ull,0x00044C200338ull,
0x00044C800338ull,0x00044CA00338ull,0x00044E400338ull,0x00044E600338ull,0x00044EC00338ull,0x00044EE00338ull,
0x00044F400338ull,0x00044F600338ull,0x00044F800338ull,0x00044FA00338ull,0x000450400338ull,0x000450600338ull,
0x000450C00338ull,0x000450E00338ull,0x000452200338ull,0x000452400338ull,0x000454400338ull,0x000455000338ull,
0x000455200338ull,0x000455600338ull,0x000456400338ull,0x000456600338ull,0x000456800338ull,0x000456A00338ull,
0x000608C03099ull,0x000609603099ull,0x000609A03099ull,0x000609E03099ull,0x00060A203099ull,0x00060A603099ull,
0x00060AA03099ull,0x00060AE03099ull,0x00060B203099ull,0x00060B603099ull,0x00060BA03099ull,0x00060BE03099ull,
0x00060C203099ull,0x00060C803099ull,0x00060CC03099ull,0x00060D003099ull,0x00060DE03099ull,0x00060DE0309Aull,
0x00060E403099ull,0x00060E40309Aull,0x00060EA03099ull,0x00060EA0309Aull,0x00060F003099ull,0x00060F00309Aull,
0x00060F603099ull,0x00060F60309Aull,0x000613A03099ull,0x000614C03099ull,0x000615603099ull,0x000615A03099ull,
0x000615E03099ull,0x000616203099ull,0x000616603099ull,0x000616A03099ull,0x000616E03099ull,0x000617203099ull,
0x000617603099ull,0x000617A03099ull,0x000617E03099ull,0x000618203099ull,0x000618803099ull,0x000618C03099ull,
0x000619003099ull,0x000619E03099ull,0x000619E0309Aull,0x00061A403099ull,0x00061A40309Aull,0x00061AA03099ull,
0x00061AA0309Aull,0x00061B003099ull,0x00061B00309Aull,0x00061B603099ull,0x00061B60309Aull,0x00061DE03099ull,
0x00061E003099ull,0x00061E203099ull,0x00061E403099ull,0x00061FA03099ull,0x0022132110BAull,0x0022136110BAull,
0x002214A110BAull,0x002226211127ull,0x002226411127ull,0x002268E1133Eull,0x002268E11357ull,0x0022972114B0ull,
0x0022972114BAull,0x0022972114BDull,0x0022B70115AFull,0x0022B72115AFull,0x002326A11930ull,};
inline constexpr uint32_t kCompositionValue[] = {
0x226Eu,0x2260u,0x226Fu,0xC0u,0xC1u,0xC2u,0xC3u,0x100u,0x102u,0x226u,
0xC4u,0x1EA2u,0xC5u,0x1CDu,0x200u,0x202u,0x1EA0u,0x1E00u,0x104u,0x1E02u,
0x1E04u,0x1E06u,0x106u,0x108u,0x10Au,0x10Cu,0xC7u,0x1E0Au,0x10Eu,0x1E0Cu,
0x1E10u,0x1E12u,0x1E0Eu,0xC8u,0xC9u,0xCAu,0x1EBCu,0x112u,0x114u,0x116u,
0xCBu,0x1EBAu,0x11Au,0x204u,0x206u,0x1EB8u,0x228u,0x118u,0x1E18u,0x1E1Au,
0x1E1Eu,0x1F4u,0x11Cu,0x1E20u,0x11Eu,0x120u,0x1E6u,0x122u,0x124u,0x1E22u,
0x1E26u,0x21Eu,0x1E24u,0x1E28u,0x1E2Au,0xCCu,0xCDu,0xCEu,0x128u,0x12Au,
0x12Cu,0x130u,0xCFu,0x1EC8u,0x1CFu,0x208u,0x20Au,0x1ECAu,0x12Eu,0x1E2Cu,
0x134u,0x1E30u,0x1E8u,0x1E32u,0x136u,0x1E34u,0x139u,0x13Du,0x1E36u,0x13Bu,
0x1E3Cu,0x1E3Au,0x1E3Eu,0x1E40u,0x1E42u,0x1F8u,0x143u,0xD1u,0x1E44u,0x147u,
0x1E46u,0x145u,0x1E4Au,0x1E48u,0xD2u,0xD3u,0xD4u,0xD5u,0x14Cu,0x14Eu,
0x22Eu,0xD6u,0x1ECEu,0x150u,0x1D1u,0x20Cu,0x20Eu,0x1A0u,0x1ECCu,0x1EAu,
0x1E54u,0x1E56u,0x154u,0x1E58u,0x158u,0x210u,0x212u,0x1E5Au,0x156u,0x1E5Eu,
0x15Au,0x15Cu,0x1E60u,0x160u,0x1E62u,0x218u,0x15Eu,0x1E6Au,0x164u,0x1E6Cu,
0x21Au,0x162u,0x1E70u,0x1E6Eu,0xD9u,0xDAu,0xDBu,0x168u,0x16Au,0x16Cu,
0xDCu,0x1EE6u,0x16Eu,0x170u,0x1D3u,0x214u,0x216u,0x1AFu,0x1EE4u,0x1E72u,
0x172u,0x1E76u,0x1E74u,0x1E7Cu,0x1E7Eu,0x1E80u,0x1E82u,0x174u,0x1E86u,0x1E84u,
0x1E88u,0x1E8Au,0x1E8Cu,0x1EF2u,0xDDu,0x176u,0x1EF8u,0x232u,0x1E8Eu,0x178u,
0x1EF6u,0x1EF4u,0x179u,0x1E90u,0x17Bu,0x17Du,0x1E92u,0x1E94u,0xE0u,0xE1u,
0xE2u,0xE3u,0x101u,0x103u,0x227u,0xE4u,0x1EA3u,0xE5u,0x1CEu,0x201u,
0x203u,0x1EA1u,0x1E01u,0x105u,0x1E03u,0x1E05u,0x1E07u,0x107u,0x109u,0x10Bu,
0x10Du,0xE7u,0x1E0Bu,0x10Fu,0x1E0Du,0x1E11u,0x1E13u,0x1E0Fu,0xE8u,0xE9u,
0xEAu,0x1EBDu,0x113u,0x115u,0x117u,0xEBu,0x1EBBu,0x11Bu,0x205u,0x207u,
0x1EB9u,0x229u,0x119u,0x1E19u,0x1E1Bu,0x1E1Fu,0x1F5u,0x11Du,0x1E21u,0x11Fu,
0x121u,0x1E7u,0x123u,0x125u,0x1E23u,0x1E27u,0x21Fu,0x1E25u,0x1E29u,0x1E2Bu,
0x1E96u,0xECu,0xEDu,0xEEu,0x129u,0x12Bu,0x12Du,0xEFu,0x1EC9u,0x1D0u,
0x209u,0x20Bu,0x1ECBu,0x12Fu,0x1E2Du,0x135u,0x1F0u,0x1E31u,0x1E9u,0x1E33u,
0x137u,0x1E35u,0x13Au,0x13Eu,0x1E37u,0x13Cu,0x1E3Du,0x1E3Bu,0x1E3Fu,0x1E41u,
0x1E43u,0x1F9u,0x144u,0xF1u,0x1E45u,0x148u,0x1E47u,0x146u,0x1E4Bu,0x1E49u,
0xF2u,0xF3u,0xF4u,0xF5u,0x14Du,0x14Fu,0x22Fu,0xF6u,0x1ECFu,0x151u,
0x1D2u,0x20Du,0x20Fu,0x1A1u,0x1ECDu,0x1EBu,0x1E55u,0x1E57u,0x155u,0x1E59u,
0x159u,0x211u,0x213u,0x1E5Bu,0x157u,0x1E5Fu,0x15Bu,0x15Du,0x1E61u,0x161u,
0x1E63u,0x219u,0x15Fu,0x1E6Bu,0x1E97u,0x165u,0x1E6Du,0x21Bu,0x163u,0x1E71u,
0x1E6Fu,0xF9u,0xFAu,0xFBu,0x169u,0x16Bu,0x16Du,0xFCu,0x1EE7u,0x16Fu,
0x171u,0x1D4u,0x215u,0x217u,0x1B0u,0x1EE5u,0x1E73u,0x173u,0x1E77u,0x1E75u,
0x1E7Du,0x1E7Fu,0x1E81u,0x1E83u,0x175u,0x1E87u,0x1E85u,0x1E98u,0x1E89u,0x1E8Bu,
0x1E8Du,0x1EF3u,0xFDu,0x177u,0x1EF9u,0x233u,0x1E8Fu,0xFFu,0x1EF7u,0x1E99u,
0x1EF5u,0x17Au,0x1E91u,0x17Cu,0x17Eu,0x1E93u,0x1E95u,0x1FEDu,0x385u,0x1FC1u,
0x1EA6u,0x1EA4u,0x1EAAu,0x1EA8u,0x1DEu,0x1FAu,0x1FCu,0x1E2u,0x1E08u,0x1EC0u,
0x1EBEu,0x1EC4u,0x1EC2u,0x1E2Eu,0x1ED2u,0x1ED0u,0x1ED6u,0x1ED4u,0x1E4Cu,0x22Cu,
0x1E4Eu,0x22Au,0x1FEu,0x1DBu,0x1D7u,0x1D5u,0x1D9u,0x1EA7u,0x1EA5u,0x1EABu,
0x1EA9u,0x1DFu,0x1FBu,0x1FDu,0x1E3u,0x1E09u,0x1EC1u,0x1EBFu,0x1EC5u,0x1EC3u,
0x1E2Fu,0x1ED3u,0x1ED1u,0x1ED7u,0x1ED5u,0x1E4Du,0x22Du,0x1E4Fu,0x22Bu,0x1FFu,
0x1DCu,0x1D8u,0x1D6u,0x1DAu,0x1EB0u,0x1EAEu,0x1EB4u,0x1EB2u,0x1EB1u,0x1EAFu,
0x1EB5u,0x1EB3u,0x1E14u,0x1E16u,0x1E15u,0x1E17u,0x1E50u,0x1E52u,0x1E51u,0x1E53u,
0x1E64u,0x1E65u,0x1E66u,0x1E67u,0x1E78u,0x1E79u,0x1E7Au,0x1E7Bu,0x1E9Bu,0x1EDCu,
0x1EDAu,0x1EE0u,0x1EDEu,0x1EE2u,0x1EDDu,0x1EDBu,0x1EE1u,0x1EDFu,0x1EE3u,0x1EEAu,
0x1EE8u,0x1EEEu,0x1EECu,0x1EF0u,0x1EEBu,0x1EE9u,0x1EEFu,0x1EEDu,0x1EF1u,0x1EEu,
0x1ECu,0x1EDu,0x1E0u,0x1E1u,0x1E1Cu,0x1E1Du,0x230u,0x231u,0x1EFu,0x1FBAu,
0x386u,0x1FB9u,0x1FB8u,0x1F08u,0x1F09u,0x1FBCu,0x1FC8u,0x388u,0x1F18u,0x1F19u,
0x1FCAu,0x389u,0x1F28u,0x1F29u,0x1FCCu,0x1FDAu,0x38Au,0x1FD9u,0x1FD8u,0x3AAu,
0x1F38u,0x1F39u,0x1FF8u,0x38Cu,0x1F48u,0x1F49u,0x1FECu,0x1FEAu,0x38Eu,0x1FE9u,
0x1FE8u,0x3ABu,0x1F59u,0x1FFAu,0x38Fu,0x1F68u,0x1F69u,0x1FFCu,0x1FB4u,0x1FC4u,
0x1F70u,0x3ACu,0x1FB1u,0x1FB0u,0x1F00u,0x1F01u,0x1FB6u,0x1FB3u,0x1F72u,0x3ADu,
0x1F10u,0x1F11u,0x1F74u,0x3AEu,0x1F20u,0x1F21u,0x1FC6u,0x1FC3u,0x1F76u,0x3AFu,
0x1FD1u,0x1FD0u,0x3CAu,0x1F30u,0x1F31u,0x1FD6u,0x1F78u,0x3CCu,0x1F40u,0x1F41u,
0x1FE4u,0x1FE5u,0x1F7Au,0x3CDu,0x1FE1u,0x1FE0u,0x3CBu,0x1F50u,0x1F51u,0x1FE6u,
0x1F7Cu,0x3CEu,0x1F60u,0x1F61u,0x1FF6u,0x1FF3u,0x1FD2u,0x390u,0x1FD7u,0x1FE2u,
0x3B0u,0x1FE7u,0x1FF4u,0x3D3u,0x3D4u,0x407u,0x4D0u,0x4D2u,0x403u,0x400u,
0x4D6u,0x401u,0x4C1u,0x4DCu,0x4DEu,0x40Du,0x4E2u,0x419u,0x4E4u,0x40Cu,
0x4E6u,0x4EEu,0x40Eu,0x4F0u,0x4F2u,0x4F4u,0x4F8u,0x4ECu,0x4D1u,0x4D3u,
0x453u,0x450u,0x4D7u,0x451u,0x4C2u,0x4DDu,0x4DFu,0x45Du,0x4E3u,0x439u,
0x4E5u,0x45Cu,0x4E7u,0x4EFu,0x45Eu,0x4F1u,0x4F3u,0x4F5u,0x4F9u,0x4EDu,
0x457u,0x476u,0x477u,0x4DAu,0x4DBu,0x4EAu,0x4EBu,0x622u,0x623u,0x625u,
0x624u,0x626u,0x6C2u,0x6D3u,0x6C0u,0x929u,0x931u,0x934u,0x9CBu,0x9CCu,
0xB4Bu,0xB48u,0xB4Cu,0xB94u,0xBCAu,0xBCCu,0xBCBu,0xC48u,0xCC0u,0xCCAu,
0xCC7u,0xCC8u,0xCCBu,0xD4Au,0xD4Cu,0xD4Bu,0xDDAu,0xDDCu,0xDDEu,0xDDDu,
0x1026u,0x1B06u,0x1B08u,0x1B0Au,0x1B0Cu,0x1B0Eu,0x1B12u,0x1B3Bu,0x1B3Du,0x1B40u,
0x1B41u,0x1B43u,0x1E38u,0x1E39u,0x1E5Cu,0x1E5Du,0x1E68u,0x1E69u,0x1EACu,0x1EB6u,
0x1EADu,0x1EB7u,0x1EC6u,0x1EC7u,0x1ED8u,0x1ED9u,0x1F02u,0x1F04u,0x1F06u,0x1F80u,
0x1F03u,0x1F05u,0x1F07u,0x1F81u,0x1F82u,0x1F83u,0x1F84u,0x1F85u,0x1F86u,0x1F87u,
0x1F0Au,0x1F0Cu,0x1F0Eu,0x1F88u,0x1F0Bu,0x1F0Du,0x1F0Fu,0x1F89u,0x1F8Au,0x1F8Bu,
0x1F8Cu,0x1F8Du,0x1F8Eu,0x1F8Fu,0x1F12u,0x1F14u,0x1F13u,0x1F15u,0x1F1Au,0x1F1Cu,
0x1F1Bu,0x1F1Du,0x1F22u,0x1F24u,0x1F26u,0x1F90u,0x1F23u,0x1F25u,0x1F27u,0x1F91u,
0x1F92u,0x1F93u,0x1F94u,0x1F95u,0x1F96u,0x1F97u,0x1F2Au,0x1F2Cu,0x1F2Eu,0x1F98u,
0x1F2Bu,0x1F2Du,0x1F2Fu,0x1F99u,0x1F9Au,0x1F9Bu,0x1F9Cu,0x1F9Du,0x1F9Eu,0x1F9Fu,
0x1F32u,0x1F34u,0x1F36u,0x1F33u,0x1F35u,0x1F37u,0x1F3Au,0x1F3Cu,0x1F3Eu,0x1F3Bu,
0x1F3Du,0x1F3Fu,0x1F42u,0x1F44u,0x1F43u,0x1F45u,0x1F4Au,0x1F4Cu,0x1F4Bu,0x1F4Du,
0x1F52u,0x1F54u,0x1F56u,0x1F53u,0x1F55u,0x1F57u,0x1F5Bu,0x1F5Du,0x1F5Fu,0x1F62u,
0x1F64u,0x1F66u,0x1FA0u,0x1F63u,0x1F65u,0x1F67u,0x1FA1u,0x1FA2u,0x1FA3u,0x1FA4u,
0x1FA5u,0x1FA6u,0x1FA7u,0x1F6Au,0x1F6Cu,0x1F6Eu,0x1FA8u,0x1F6Bu,0x1F6Du,0x1F6Fu,
0x1FA9u,0x1FAAu,0x1FABu,0x1FACu,0x1FADu,0x1FAEu,0x1FAFu,0x1FB2u,0x1FC2u,0x1FF2u,
0x1FB7u,0x1FCDu,0x1FCEu,0x1FCFu,0x1FC7u,0x1FF7u,0x1FDDu,0x1FDEu,0x1FDFu,0x219Au,
0x219Bu,0x21AEu,0x21CDu,0x21CFu,0x21CEu,0x2204u,0x2209u,0x220Cu,0x2224u,0x2226u,
0x2241u,0x2244u,0x2247u,0x2249u,0x226Du,0x2262u,0x2270u,0x2271u,0x2274u,0x2275u,
0x2278u,0x2279u,0x2280u,0x2281u,0x22E0u,0x22E1u,0x2284u,0x2285u,0x2288u,0x2289u,
0x22E2u,0x22E3u,0x22ACu,0x22ADu,0x22AEu,0x22AFu,0x22EAu,0x22EBu,0x22ECu,0x22EDu,
0x3094u,0x304Cu,0x304Eu,0x3050u,0x3052u,0x3054u,0x3056u,0x3058u,0x305Au,0x305Cu,
0x305Eu,0x3060u,0x3062u,0x3065u,0x3067u,0x3069u,0x3070u,0x3071u,0x3073u,0x3074u,
0x3076u,0x3077u,0x3079u,0x307Au,0x307Cu,0x307Du,0x309Eu,0x30F4u,0x30ACu,0x30AEu,
0x30B0u,0x30B2u,0x30B4u,0x30B6u,0x30B8u,0x30BAu,0x30BCu,0x30BEu,0x30C0u,0x30C2u,
0x30C5u,0x30C7u,0x30C9u,0x30D0u,0x30D1u,0x30D3u,0x30D4u,0x30D6u,0x30D7u,0x30D9u,
0x30DAu,0x30DCu,0x30DDu,0x30F7u,0x30F8u,0x30F9u,0x30FAu,0x30FEu,0x1109Au,0x1109Cu,
0x110ABu,0x1112Eu,0x1112Fu,0x1134Bu,0x1134Cu,0x114BCu,0x114BBu,0x114BEu,0x115BAu,0x115BBu,
0x11938u,};
inline constexpr size_t kCompositionCount = 941;

}  // namespace segtag::unicode_data
