// Generated by scripts/gen_rs_coeffs.py -- do not edit by hand.
// Chebyshev series (argument u = 2p - 1) of the Riemann-Siegel
// correction functions C_k(p), k = 0..17.

#include "zll/detail/rs_coeffs.hpp"

namespace zll::detail {

static const double kC0[] = {
    6.42667286239768432e-01,
    -4.06622473087189560e-45,
    2.71972999997855069e-01,
    1.19575120130815888e-45,
    1.07386058193402849e-02,
    1.93235223939589052e-46,
    -1.37438152963366140e-03,
    -4.33343249612512577e-47,
    -1.24682218803206764e-04,
    -1.65765706156960314e-48,
    -5.76459970678304790e-07,
    1.60708955576971254e-48,
    2.72806742958045197e-07,
    -3.43247619950217823e-49,
    8.07795305950047079e-09,
    6.75700677125172372e-50,
    -2.08846080688696536e-10,
    -7.94924064373338378e-50,
    -1.31155618547395278e-11,
    2.30969164065353164e-50,
    -1.42079872280871855e-14,
    5.70101521528098659e-50,
    1.02717013579311616e-14,
    -9.11795467694913097e-51,
    1.39745988195183732e-16,
    -2.49432482047336446e-50,
    -4.48411873395228848e-18,
    5.87662819349116608e-50,
    -1.18305995738452886e-19,
};
static const double kC1[] = {
    -4.03034151564421794e-41,
    1.06979139210030012e-02,
    3.51063358657914171e-41,
    1.71706512433778824e-02,
    6.41008222418732943e-42,
    2.79321114978847099e-03,
    -2.64971691648595710e-42,
    -3.63756537192750452e-05,
    5.03515036963551766e-43,
    -2.71089552311508878e-05,
    -8.20183736922520995e-44,
    -1.04837498667527742e-06,
    1.26977908494759190e-44,
    5.88646716652757198e-08,
    -2.05809949932252817e-45,
    4.32296726850277916e-09,
    4.14740311070096345e-46,
    -1.13695915882737119e-11,
    -9.84462620038337687e-47,
    -6.69983391035532744e-12,
    -6.56737532257347870e-47,
    -1.00799976528084746e-13,
    1.50740482422403928e-46,
    5.15248800922211668e-15,
    6.78370515465085577e-48,
    1.52169544718369704e-16,
    -9.32843088465262976e-47,
    -1.86194648336871027e-18,
    9.41573766885573406e-47,
    -1.13018461842462654e-19,
};
static const double kC2[] = {
    3.14611585398891225e-03,
    -1.21488722847994134e-38,
    -2.30878388453075031e-03,
    3.46004742048876533e-39,
    5.76982076668984434e-05,
    5.70945434650581893e-40,
    3.52388620236658990e-04,
    -1.22841571691535727e-40,
    2.52466674586844343e-05,
    -6.71246713447262267e-42,
    -3.44282119719313581e-06,
    5.14141629350932692e-42,
    -3.53507455662245907e-07,
    -1.09711601345676921e-42,
    3.73083018379262518e-09,
    2.12878157358986211e-43,
    1.27769518641166354e-09,
    -1.99058955577869845e-43,
    2.18746162041470573e-11,
    5.39869226953510051e-44,
    -1.91414109646103699e-12,
    1.32975674527680586e-43,
    -6.56288310216852271e-14,
    -1.53851073209939156e-44,
    1.25860091824117152e-15,
    -5.76698150033090677e-44,
    8.14007662388146293e-17,
    1.39784773967379137e-43,
    -5.42387427548860780e-20,
    -3.59707134328361480e-45,
    -5.79698013108654267e-20,
};
static const double kC3[] = {
    -3.30688550256876498e-35,
    7.12325622120387359e-05,
    2.88613800650709694e-35,
    2.32343052981648075e-04,
    5.25355186037846488e-36,
    -1.29299120454724737e-04,
    -2.17774178428507532e-36,
    1.80744964136714404e-05,
    4.13964665858998898e-37,
    6.52618518722043951e-06,
    -6.73979672423931303e-38,
    -1.16963653785219857e-07,
    1.03964567051390936e-38,
    -7.34947612651812572e-08,
    -1.67276924843978159e-39,
    -1.77509100779070716e-09,
    3.30785978814193592e-40,
    2.55555296132652492e-10,
    -7.55345008387283189e-41,
    1.13766366005372998e-11,
    -3.75477767664277713e-41,
    -3.34986389853027691e-13,
    9.26049869924437911e-41,
    -2.55373793541638928e-14,
    9.40513045616895947e-43,
    6.76650077132187091e-17,
    -5.75636606543351376e-41,
    2.97688847199197288e-17,
    6.30231936583211932e-41,
    2.99522080875669150e-19,
    -4.15745046791852620e-41,
    -2.04611884975750818e-20,
};
static const double kC4[] = {
    1.67657452466968607e-04,
    -3.91675903462202691e-33,
    -2.27287689434167261e-04,
    1.07080734235098464e-33,
    6.47738718844569642e-05,
    1.81549231710768295e-34,
    -8.49220050012540947e-06,
    -3.69696459625325545e-35,
    -2.61614072452190756e-06,
    -2.86266818143305042e-36,
    8.33676496873321494e-07,
    1.79394613507658026e-36,
    6.32470403754483299e-08,
    -3.81344725361002911e-37,
    -1.00599494030010716e-08,
    7.23718374695762862e-38,
    -7.82267720413033309e-10,
    -5.27947863228689480e-38,
    3.16765828534986032e-11,
    1.35063665492280282e-38,
    3.50069447020528944e-12,
    3.23995491802085945e-38,
    -1.43148145114437483e-14,
    -2.68407430676953844e-39,
    -7.26940270792176375e-15,
    -1.38480750722536668e-38,
    -8.78055659483595707e-17,
    3.45855272717174350e-38,
    8.15025447495458025e-18,
    -2.11079641413353666e-39,
    1.92083970582208608e-19,
};
static const double kC5[] = {
    -5.19347489768738129e-30,
    8.82884523480890186e-05,
    4.54334917667243266e-30,
    -1.56286849693283887e-05,
    8.24047953793755867e-31,
    -1.83424476971600837e-07,
    -3.42700089326973044e-31,
    2.10972678749375432e-06,
    6.51675220888615650e-32,
    -6.65701617409638767e-07,
    -1.06020900738850417e-32,
    2.77147412050684307e-08,
    1.62989793867946110e-33,
    1.81112493757648746e-08,
    -2.60454349556834790e-34,
    -5.76589081171597741e-10,
    5.05499372858635781e-35,
    -1.86750334260831528e-10,
    -1.11294787269762391e-35,
    -1.10516089170930213e-13,
    -3.79308315039221884e-36,
    7.87064336805682406e-13,
    1.04492403699657032e-35,
    1.44583509956551207e-14,
    -1.72393291328155859e-37,
    -1.58145919086095294e-15,
    -6.57774316433568884e-36,
    -4.91063883036378986e-17,
    7.59241714195809533e-36,
    1.64442012206667878e-18,
    -4.88791407039558935e-36,
    7.77801791752321909e-20,
};
static const double kC6[] = {
    1.21897421410689712e-05,
    -3.13809091431583318e-28,
    -1.38297601405037872e-05,
    8.13497343290818895e-29,
    5.11096730499826035e-06,
    1.42970755381232161e-29,
    -2.04581364503860756e-06,
    -2.70023962032765624e-30,
    4.93813664483201224e-07,
    -2.98704996656469462e-31,
    -3.61875283496228161e-08,
    1.57364370161819361e-31,
    -1.28769050980798603e-08,
    -3.31841358185227901e-32,
    2.57441211114486604e-09,
    6.14721407506960043e-33,
    1.36414570707916845e-10,
    -3.45271208247627813e-33,
    -3.03243957408438193e-11,
    8.35474487547961299e-34,
    -1.32166712399025372e-12,
    1.90120540784296712e-33,
    1.30316521300093677e-13,
    -1.16096602472156123e-34,
    6.63588355320067002e-15,
    -7.99382405964898710e-34,
    -2.46003565479328011e-16,
    2.05523010640929091e-33,
    -1.68152792081688339e-17,
    -1.81714464182001886e-34,
    1.89379320803594996e-19,
    -9.07477404513632323e-34,
    2.43065061273723937e-20,
};
static const double kC7[] = {
    -2.37229434571609958e-25,
    1.27686577974382188e-05,
    2.08113993526685910e-25,
    -3.86293383464159910e-06,
    3.75908924834588055e-26,
    1.36938309364678795e-06,
    -1.56911853241640779e-26,
    -2.76470416827934909e-07,
    2.98502618750437059e-27,
    1.02834368233452095e-08,
    -4.85136555227060234e-28,
    1.17550665681690873e-08,
    7.43482056086839324e-29,
    -3.05504891584699525e-09,
    -1.18083779045627246e-29,
    1.14304418993469726e-10,
    2.25349304047966351e-30,
    5.13081867536019744e-11,
    -4.80525050841587010e-31,
    -2.83550991025145112e-12,
    -9.84440947682445283e-32,
    -4.26665416164993104e-13,
    3.29203854989463199e-31,
    1.27635730085173749e-14,
    -1.17169798787953346e-32,
    1.85690800324622810e-15,
    -2.11543472409450292e-31,
    -1.53642870789779521e-17,
    2.51783832615241034e-31,
    -4.41155903885377124e-18,
    -1.59835420736068625e-31,
    -2.25423488894978958e-20,
};
static const double kC8[] = {
    1.22855850880910792e-06,
    -7.95269153044913289e-24,
    -1.19409863960772429e-06,
    1.92115529449470119e-24,
    -6.09999965391951832e-08,
    3.54543329213266902e-25,
    -8.84406391388595225e-09,
    -6.01619193390518134e-26,
    3.16981631719440216e-08,
    -9.75828372366124681e-27,
    -1.42004720958833981e-08,
    4.41965977512838494e-27,
    3.16141059154714795e-09,
    -9.20594448771019732e-28,
    -2.44363152621160819e-10,
    1.66690349569590232e-28,
    -4.32263123656343804e-11,
    -7.18504244530941886e-29,
    9.01768190773949550e-12,
    1.63810871663997770e-29,
    1.46989079200089238e-13,
    3.41952694079737854e-29,
    -8.70330538247097948e-14,
    -1.65546928662380005e-30,
    -8.37977080337316621e-16,
    -1.41504668172114656e-29,
    3.88745506866618527e-16,
    3.73977164358487542e-29,
    6.24068507244033950e-18,
    -4.09098945526045144e-30,
    -9.22917087537074800e-19,
    -1.61881358070000884e-29,
    -2.15924263747326250e-20,
};
static const double kC9[] = {
    -3.65380613749513797e-21,
    3.02079704385429363e-06,
    3.21599640576291306e-21,
    -7.06952232429564511e-07,
    5.78176945169634434e-22,
    2.21165203025285843e-07,
    -2.42352547654147324e-22,
    -6.51579761280399347e-08,
    4.61242367131806363e-23,
    1.62087339811117519e-08,
    -7.48644533361998411e-24,
    -2.94852983420573057e-09,
    1.14392255601657751e-24,
    2.35452870373972350e-10,
    -1.80734981667995104e-25,
    4.05103234551368515e-11,
    3.40040114144899590e-26,
    -1.29066382675244807e-11,
    -7.06598117643919008e-27,
    7.51832792602008550e-13,
    -6.47660375859462722e-28,
    1.28191680426232839e-13,
    3.33621436375984549e-27,
    -1.18974209065655968e-14,
    -1.61152946737995594e-28,
    -7.62605702964817815e-16,
    -2.21055982413037146e-27,
    6.03352950100625932e-17,
    2.66912779907554563e-27,
    3.10017310277495497e-18,
    -1.68062301071461435e-27,
    -1.46568102330563402e-19,
};
static const double kC10[] = {
    6.98115792825511709e-08,
    -6.92078318573792559e-20,
    5.18760209975489357e-08,
    1.51872076210857654e-20,
    -1.50256894004215477e-07,
    3.00155378190925425e-21,
    5.38517541543116475e-08,
    -4.33489316144431437e-22,
    -1.20094709472165412e-08,
    -1.08730821215157710e-22,
    1.84414161121403493e-09,
    4.31614282277173088e-23,
    -6.05128592259146791e-11,
    -8.84868802445643877e-24,
    -5.89139276447790337e-11,
    1.57036199796585804e-24,
    1.65157726414322917e-11,
    -5.24472088008159376e-25,
    -1.64899182754469299e-12,
    1.11694269264017103e-25,
    -8.45000740923886808e-14,
    2.03673098513610790e-25,
    3.02351801775047501e-14,
    -8.72863086289607148e-27,
    -6.17920112365788797e-16,
    -8.31383871632783352e-26,
    -2.15064801928026526e-16,
    2.25677910729082474e-25,
    5.23605823531560556e-18,
    -2.83420930133460214e-26,
    8.70294613120802693e-19,
    -9.55995308208640329e-26,
    -1.27209840358001531e-20,
};
static const double kC11[] = {
    -1.97476744967497816e-17,
    7.20526688629129338e-07,
    1.74490639772876928e-17,
    -9.52465196778260538e-08,
    3.12069701492333415e-18,
    6.86071033342968025e-09,
    -1.31412751868069430e-18,
    -1.08618607719194088e-09,
    2.50222070581252497e-19,
    5.64765455472275176e-10,
    -4.05499400674356489e-20,
    -3.03031357223601461e-10,
    6.17836815732741076e-21,
    1.01610235115607769e-10,
    -9.71881248553985076e-22,
    -2.12186953395606707e-11,
    1.80770160598473040e-22,
    2.35940657306100260e-12,
    -3.68484780380103777e-23,
    2.49356166931687794e-14,
    -2.38563249131047052e-26,
    -4.48872517169413223e-14,
    1.11074851968543388e-23,
    4.09384456546456122e-15,
    -6.18289943848093635e-25,
    2.16256116794034962e-16,
    -7.71533703821238084e-24,
    -4.04855926584609840e-17,
    9.33668872221326107e-24,
    -5.79717698901984556e-19,
    -5.84937317539498287e-24,
    1.81959235691500533e-19,
};
static const double kC12[] = {
    -2.97409725521395408e-08,
    -2.05298924493170254e-16,
    6.06800084091077688e-08,
    3.93336040854247363e-17,
    -4.23949884794280262e-08,
    8.59514871118364801e-18,
    1.39331360637500324e-08,
    -9.50222863764721127e-19,
    -3.19566638301535829e-09,
    -4.11179429178133459e-19,
    7.14448991490195649e-10,
    1.45513518832335361e-19,
    -1.49903924506176177e-10,
    -2.92879676333148139e-20,
    2.52196244447262867e-11,
    5.10902663067120393e-21,
    -2.62133015025431582e-12,
    -1.35319649654808304e-21,
    -3.00491714729968396e-14,
    2.66414429075291198e-22,
    6.17316840872003742e-14,
    3.92809538579079220e-22,
    -8.70482425962587102e-15,
    -1.67828254150327542e-23,
    1.20673418042736769e-16,
    -1.59027151901386800e-22,
    8.33971996958086485e-17,
    4.43484348799887483e-22,
    -4.93827652934131242e-18,
    -6.13808971995932074e-23,
    -3.91006316917223730e-19,
    -1.83248246025217992e-22,
    2.86575857664444617e-20,
};
static const double kC13[] = {
    -3.60002154913215080e-14,
    2.01596120389502316e-07,
    3.19535450172666865e-14,
    -8.16294883278275281e-09,
    5.68240734967298447e-15,
    -9.21478564634199272e-09,
    -2.40476506824277440e-15,
    3.00223706569456435e-09,
    4.58154057260342399e-16,
    -7.32059336266666209e-10,
    -7.41197499861032217e-17,
    1.45790100163912483e-10,
    1.12624760461054295e-17,
    -2.16143306364070969e-11,
    -1.76526996163794124e-18,
    1.66829553961620177e-12,
    3.25422402435633161e-19,
    2.05068824300133113e-13,
    -6.54649405705731807e-20,
    -9.41639352095045476e-14,
    4.62007781289244784e-21,
    1.45950864741673456e-14,
    1.11146001866838923e-20,
    -7.36444276739191492e-16,
    -6.42789297169901694e-22,
    -1.05035907022601446e-16,
    -8.38511651890200142e-21,
    1.66987768317246812e-17,
    1.00740868302528486e-20,
    -8.08938367793650024e-20,
    -6.28983536988574814e-21,
    -1.00839367041984394e-19,
    -7.95138544676715401e-21,
    -2.47728003226005865e-21,
    -1.08401088732844199e-20,
};
static const double kC14[] = {
    -2.40375923475976837e-08,
    -1.86828241780430549e-13,
    3.04744871335948357e-08,
    2.92121674243288715e-14,
    -7.49669761367389154e-09,
    7.47237815948459426e-15,
    1.42914892741793541e-09,
    -4.79291895724262662e-16,
    -6.21872603337658542e-11,
    -4.75842754575330097e-16,
    -1.63429213746994547e-11,
    1.52431300072480546e-16,
    2.50555862151440640e-13,
    -3.00763399009912508e-17,
    1.69355852516516537e-12,
    5.17010796553164477e-18,
    -6.81026512281247365e-13,
    -1.12453042905037212e-18,
    1.56553860131112455e-13,
    2.03115359001104477e-19,
    -2.24986211423478971e-14,
    2.12159072900095939e-19,
    1.50174235896087573e-15,
    -9.88769284430439861e-21,
    1.12090713604058571e-16,
    -8.64478358220834263e-20,
    -3.30401724938297977e-17,
    2.48003428407117120e-19,
    1.73514641546106449e-18,
    -3.69384751562075523e-20,
    2.75381176136069701e-19,
    -9.95117162183494777e-20,
    1.38912172037223070e-19,
    1.02526675097808328e-19,
    2.16479192809706562e-19,
    -2.94839266765834780e-20,
    -1.72988471136001684e-19,
    1.22342736637531150e-19,
    5.32097927883491297e-20,
    -9.56710228643665661e-20,
};
static const double kC15[] = {
    -1.90906350299104570e-11,
    5.81579876770142735e-08,
    1.70327998155259044e-11,
    1.44892300208928609e-09,
    3.01066032138641687e-12,
    -4.44834748284543657e-09,
    -1.28085102174067769e-12,
    1.07166837646694586e-09,
    2.44259192872419935e-13,
    -1.97718278093678041e-10,
    -3.94590747994700992e-14,
    3.80149252260698179e-11,
    5.98183808275269280e-15,
    -7.60893018285846187e-12,
    -9.35037642919677290e-16,
    1.47076189606576924e-12,
    1.71201799847041101e-16,
    -2.47687363793954704e-13,
    -3.41541697739355130e-17,
    3.14971562675990678e-14,
    4.27838900185108549e-18,
    -2.11093441956873740e-15,
    2.43987135355726793e-18,
    -1.54338505796920729e-16,
    -1.24003707722553166e-19,
    5.83555653665204285e-17,
    -2.24698169422245852e-18,
    -8.83316423947055989e-18,
    2.65830205801993701e-18,
    4.75854237655987563e-19,
    -1.65548272295499348e-18,
    1.35012529889187158e-18,
    -2.11162350280927089e-18,
    -1.40551331786315782e-18,
    -2.89512478769211182e-18,
    3.94442509739686863e-19,
    2.30089195062978223e-18,
    -1.61878713796307944e-18,
    -7.05990540331401397e-19,
    1.27079095672428229e-18,
};
static const double kC16[] = {
    -1.29281935537959365e-08,
    -3.76723995133839017e-11,
    1.30273154142212756e-08,
    4.19950843907353184e-12,
    2.90704100881413834e-10,
    1.41900783557574666e-12,
    -5.57956258221663314e-10,
    1.91407106298539614e-15,
    2.13675277617524358e-10,
    -1.21919091193947745e-13,
    -5.71637314325611587e-11,
    3.58374763159663161e-14,
    1.18444796104619290e-11,
    -6.92840593562435900e-15,
    -2.07305695601413893e-12,
    1.17609139359030388e-15,
    3.06748448778093024e-13,
    -2.19027543332046262e-16,
    -3.39618366687286657e-14,
    3.62937321194831248e-17,
    1.55129410696671707e-15,
    2.04486349455527346e-17,
    3.37843456712968021e-16,
    -1.07423012714046367e-18,
    -9.96030008634066915e-17,
    -8.85391627509038100e-18,
    2.95600308994771329e-17,
    2.61836954977231736e-17,
    -2.13938571935334915e-17,
    -4.13705517769670722e-18,
    1.30118332957344774e-17,
    -1.01469073355597623e-17,
    1.68083934548423662e-17,
    1.14662375435488083e-17,
    2.30924136803924787e-17,
    -3.14425439900761196e-18,
    -1.82564676791113843e-17,
    1.27846684596647656e-17,
    5.60021226215292942e-18,
    -1.00755428692048627e-17,
};
static const double kC17[] = {
    -1.93315037696332001e-09,
    1.73445916181437994e-08,
    1.73508910822846535e-09,
    6.63293228659373293e-10,
    3.04645916319104176e-10,
    -1.28492051032458251e-09,
    -1.30394008907409185e-10,
    1.80482831366332049e-10,
    2.49312969820100985e-11,
    4.29034830980373535e-12,
    -4.02954388693269873e-12,
    -5.60552560281225508e-12,
    6.10513523939533963e-13,
    1.26992692282246629e-12,
    -9.53301481160497264e-14,
    -1.84241738534704874e-13,
    1.73645592384885023e-14,
    1.32770702934131725e-14,
    -3.44569468754493483e-15,
    1.93963852430158078e-15,
    5.74296800432481719e-16,
    -1.00481913351755877e-15,
    -1.45782518332328801e-19,
    1.87309929640376623e-16,
    4.00103828134383417e-18,
    9.69731317525813178e-18,
    -6.50302414512439755e-17,
    -9.25174797539821849e-17,
    7.48887372737308423e-17,
    1.52791790212944749e-17,
    -4.65481994173841501e-17,
    3.55275536655072881e-17,
    -6.01580612072939468e-17,
    -4.21705757847195128e-17,
    -8.29004260505790553e-17,
    1.12437063400699998e-17,
    6.51635959615641168e-17,
    -4.54211816145149891e-17,
    -2.00136121255984211e-17,
    3.59391161010631692e-17,
};

static const ChebSeries kTable[] = {
    {kC0, 29},
    {kC1, 30},
    {kC2, 31},
    {kC3, 32},
    {kC4, 31},
    {kC5, 32},
    {kC6, 33},
    {kC7, 32},
    {kC8, 33},
    {kC9, 32},
    {kC10, 33},
    {kC11, 32},
    {kC12, 33},
    {kC13, 35},
    {kC14, 40},
    {kC15, 40},
    {kC16, 40},
    {kC17, 40},
};

const ChebSeries& rs_correction_series(int k) { return kTable[k]; }

}  // namespace zll::detail
