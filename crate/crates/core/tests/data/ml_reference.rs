// E_{α,β}(z) to 20 significant digits, from an arbitrary-precision evaluation
// (power series at 40+ digits, or the real-line integral representation
// for large |z|^{1/α}).
#[allow(clippy::excessive_precision)]
pub const ML_REFERENCE: &[(f64, f64, f64, f64)] = &[
    (0.1, 0.3, -100.0, 0.0021677383908839920531),
    (0.1, 0.3, -30.0, 0.0071441452370047798662),
    (0.1, 0.3, -20.0, 0.010628994549031198247),
    (0.1, 0.3, -16.0, 0.013204731762844781408),
    (0.1, 0.3, -10.0, 0.020739198155185532607),
    (0.1, 0.3, -5.0, 0.039467139132787467881),
    (0.1, 0.3, -2.0, 0.085364371084254252545),
    (0.1, 0.3, -0.5, 0.19678672710781805261),
    (0.1, 0.3, 0.5, 0.89050923864090961481),
    (0.1, 0.5, -100.0, 0.0044750314905267799198),
    (0.1, 0.5, -30.0, 0.014663997076116828848),
    (0.1, 0.5, -20.0, 0.021732100564682654516),
    (0.1, 0.5, -16.0, 0.026922340493395434218),
    (0.1, 0.5, -10.0, 0.041947084375351055663),
    (0.1, 0.5, -5.0, 0.078372615301626088569),
    (0.1, 0.5, -2.0, 0.16318500422722145662),
    (0.1, 0.5, -0.5, 0.35170429656333216147),
    (0.1, 0.5, 0.5, 1.3232975459180541804),
    (0.1, 1.0, -100.0, 0.0092726572313118582982),
    (0.1, 1.0, -30.0, 0.03026597587087465188),
    (0.1, 1.0, -20.0, 0.04473386400745095983),
    (0.1, 1.0, -16.0, 0.055309295182948698041),
    (0.1, 1.0, -10.0, 0.085696957010654685096),
    (0.1, 1.0, -5.0, 0.15804238235845182791),
    (0.1, 1.0, -2.0, 0.32001533595972739861),
    (0.1, 1.0, -0.5, 0.65432446028800192845),
    (0.1, 1.0, 0.5, 2.0770042471194151855),
    (0.1, 1.5, -100.0, 0.011160259441129277904),
    (0.1, 1.5, -30.0, 0.036369716182744795584),
    (0.1, 1.5, -20.0, 0.053697288094944719452),
    (0.1, 1.5, -16.0, 0.066339532691383860612),
    (0.1, 1.5, -10.0, 0.10255677846400679946),
    (0.1, 1.5, -5.0, 0.18814300185164659944),
    (0.1, 1.5, -2.0, 0.37666363235775281249),
    (0.1, 1.5, -0.5, 0.75357150324503174511),
    (0.1, 1.5, 0.5, 2.2218574114048877724),
    (0.1, 2.0, -100.0, 0.010291263683451154464),
    (0.1, 2.0, -30.0, 0.033504927318870497071),
    (0.1, 2.0, -20.0, 0.049434437952619442634),
    (0.1, 2.0, -16.0, 0.061043228899345153217),
    (0.1, 2.0, -10.0, 0.094237588828458266904),
    (0.1, 2.0, -5.0, 0.1723185507988490773),
    (0.1, 2.0, -2.0, 0.34257035018774019099),
    (0.1, 2.0, -0.5, 0.67624839485469152497),
    (0.1, 2.0, 0.5, 1.9059319437701143864),
    (0.1, 2.5, -100.0, 0.0079656193131398041327),
    (0.1, 2.5, -30.0, 0.025914904734620110926),
    (0.1, 2.5, -20.0, 0.038217161730371615449),
    (0.1, 2.5, -16.0, 0.047175013751976449323),
    (0.1, 2.5, -10.0, 0.072754328463802102478),
    (0.1, 2.5, -5.0, 0.13272101867417621113),
    (0.1, 2.5, -2.0, 0.26251564448818043456),
    (0.1, 2.5, -0.5, 0.51326323278454582776),
    (0.1, 2.5, 0.5, 1.4012022699452005849),
    (0.3, 0.3, -100.0, 0.000022841967214289510167),
    (0.3, 0.3, -30.0, 0.00024690078959965227566),
    (0.3, 0.3, -20.0, 0.00054462489804465207853),
    (0.3, 0.3, -16.0, 0.00083837019005855933977),
    (0.3, 0.3, -10.0, 0.0020517863032276150212),
    (0.3, 0.3, -5.0, 0.007275100803154911655),
    (0.3, 0.3, -2.0, 0.03206239921884749485),
    (0.3, 0.3, -0.5, 0.1437565001472212678),
    (0.3, 0.3, 0.5, 1.1694769581219357611),
    (0.3, 0.3, 2.0, 400586.43366882275972),
    (0.3, 0.3, 5.0, 9.6149821876998458499e+94),
    (0.3, 0.5, -100.0, 0.0021873403669499526425),
    (0.3, 0.5, -30.0, 0.0073551451503853048081),
    (0.3, 0.5, -20.0, 0.011093071721269412932),
    (0.3, 0.5, -16.0, 0.013917571243366839834),
    (0.3, 0.5, -10.0, 0.022472804921101307345),
    (0.3, 0.5, -5.0, 0.045519369411852957386),
    (0.3, 0.5, -2.0, 0.1110854803064770455),
    (0.3, 0.5, -0.5, 0.30363310176042706703),
    (0.3, 0.5, 0.5, 1.5196111396142771869),
    (0.3, 0.5, 2.0, 252353.54226878818899),
    (0.3, 0.5, 5.0, 3.2882776537383242676e+94),
    (0.3, 1.0, -100.0, 0.007658856222286641491),
    (0.3, 1.0, -30.0, 0.025182617502927663383),
    (0.3, 1.0, -20.0, 0.037406226213884453058),
    (0.3, 1.0, -16.0, 0.046415942417685559008),
    (0.3, 1.0, -10.0, 0.072649729072772086177),
    (0.3, 1.0, -5.0, 0.13708086902027063889),
    (0.3, 1.0, -2.0, 0.29023222616787535504),
    (0.3, 1.0, -0.5, 0.63264900594359902246),
    (0.3, 1.0, 0.5, 2.0620157899559994895),
    (0.3, 1.0, 2.0, 79485.907625183568623),
    (0.3, 1.0, 5.0, 2.2491502775548074025e+93),
    (0.3, 1.5, -100.0, 0.010798334500965411938),
    (0.3, 1.5, -30.0, 0.035288851411203682107),
    (0.3, 1.5, -20.0, 0.052198626571391979356),
    (0.3, 1.5, -16.0, 0.064573744526335893852),
    (0.3, 1.5, -10.0, 0.10019293777252088034),
    (0.3, 1.5, -5.0, 0.18524257891187128076),
    (0.3, 1.5, -2.0, 0.3756675047721251894),
    (0.3, 1.5, -0.5, 0.75891369933025990221),
    (0.3, 1.5, 0.5, 2.0698637836191732301),
    (0.3, 1.5, 2.0, 25035.768767242071364),
    (0.3, 1.5, 5.0, 1.5383971500319748778e+92),
    (0.3, 2.0, -100.0, 0.010893810609274198184),
    (0.3, 2.0, -30.0, 0.035470517574399536449),
    (0.3, 2.0, -20.0, 0.052335915643271980184),
    (0.3, 2.0, -16.0, 0.064625676462094794758),
    (0.3, 2.0, -10.0, 0.099754796044481872019),
    (0.3, 2.0, -5.0, 0.18222783247195027923),
    (0.3, 2.0, -2.0, 0.36037664355404642634),
    (0.3, 2.0, -0.5, 0.69676397759729896941),
    (0.3, 2.0, 0.5, 1.712064634648325041),
    (0.3, 2.0, 2.0, 7885.0134504584201732),
    (0.3, 2.0, 5.0, 1.0522488491962634523e+91),
    (0.3, 2.5, -100.0, 0.0089731695604811378968),
    (0.3, 2.5, -30.0, 0.029138289201143210223),
    (0.3, 2.5, -20.0, 0.042914032539029574343),
    (0.3, 2.5, -16.0, 0.052920834166152443499),
    (0.3, 2.5, -10.0, 0.081379851283976325393),
    (0.3, 2.5, -5.0, 0.14737731720994940246),
    (0.3, 2.5, -2.0, 0.28630026392754383602),
    (0.3, 2.5, -0.5, 0.5369421366489947327),
    (0.3, 2.5, 0.5, 1.2290016034530696984),
    (0.3, 2.5, 2.0, 2482.98008588524868),
    (0.3, 2.5, 5.0, 7.1972808881753815446e+89),
    (0.5, 0.3, -100.0, -0.0016942728229947302105),
    (0.5, 0.3, -30.0, -0.0054591301025336867628),
    (0.5, 0.3, -20.0, -0.007981234892737619633),
    (0.5, 0.3, -16.0, -0.009778791134368056662),
    (0.5, 0.3, -10.0, -0.014675824500067332189),
    (0.5, 0.3, -5.0, -0.024054156777053257358),
    (0.5, 0.3, -2.0, -0.025583637415819594916),
    (0.5, 0.3, -0.5, 0.088596217046086922041),
    (0.5, 0.3, 0.5, 1.2567908036072408236),
    (0.5, 0.3, 2.0, 288.2820642347493186),
    (0.5, 0.3, 5.0, 1370724102304.5913244),
    (0.5, 0.5, -100.0, 0.000028205248812996592434),
    (0.5, 0.5, -30.0, 0.00031291770525374203432),
    (0.5, 0.5, -20.0, 0.0007026087267299005751),
    (0.5, 0.5, -16.0, 0.0010955383488628858861),
    (0.5, 0.5, -10.0, 0.0027796561095304283729),
    (0.5, 0.5, -5.0, 0.010666394882413155097),
    (0.5, 0.5, -2.0, 0.053398230926744799218),
    (0.5, 0.5, -0.5, 0.25634441145129334951),
    (0.5, 0.5, 0.5, 1.5403698281390348336),
    (0.5, 0.5, 2.0, 218.44599836350370111),
    (0.5, 0.5, 5.0, 720048993373.86939164),
    (0.5, 1.0, -100.0, 0.0056416137829894329036),
    (0.5, 1.0, -30.0, 0.018795888861416751497),
    (0.5, 1.0, -20.0, 0.028174348741051319319),
    (0.5, 1.0, -16.0, 0.035193377824930837566),
    (0.5, 1.0, -10.0, 0.056140992743822585858),
    (0.5, 1.0, -5.0, 0.11070463773306862637),
    (0.5, 1.0, -2.0, 0.25539567631050574387),
    (0.5, 1.0, -0.5, 0.61569034419292587487),
    (0.5, 1.0, 0.5, 1.9523604891825570933),
    (0.5, 1.0, 2.0, 108.94090438997797241),
    (0.5, 1.0, 5.0, 144009798674.66104041),
    (0.5, 1.5, -100.0, 0.009943583862170105671),
    (0.5, 1.5, -30.0, 0.032706803704619441617),
    (0.5, 1.5, -20.0, 0.048591282562947434034),
    (0.5, 1.5, -16.0, 0.060300413885941822652),
    (0.5, 1.5, -10.0, 0.094385900725617741414),
    (0.5, 1.5, -5.0, 0.17785907245338627473),
    (0.5, 1.5, -2.0, 0.37230216184474712807),
    (0.5, 1.5, -0.5, 0.76861931161414825026),
    (0.5, 1.5, 0.5, 1.9047209783651141866),
    (0.5, 1.5, 2.0, 53.970452194988986206),
    (0.5, 1.5, 5.0, 28801959734.732208082),
    (0.5, 2.0, -100.0, 0.011184355832333424682),
    (0.5, 2.0, -30.0, 0.036522412113029771076),
    (0.5, 2.0, -20.0, 0.053989394226628256993),
    (0.5, 2.0, -16.0, 0.066754922075598171953),
    (0.5, 2.0, -10.0, 0.10339932663698948325),
    (0.5, 2.0, -5.0, 0.19010401892842525983),
    (0.5, 2.0, -2.0, 0.37803850262538272291),
    (0.5, 2.0, -0.5, 0.71951971096272864728),
    (0.5, 2.0, 0.5, 1.5526836225392032253),
    (0.5, 2.0, 2.0, 26.421036513946736816),
    (0.5, 2.0, 5.0, 5760391946.720765783),
    (0.5, 2.5, -100.0, 0.0098881564416766657532),
    (0.5, 2.5, -30.0, 0.032115919596232340964),
    (0.5, 2.5, -20.0, 0.04730053028866858715),
    (0.5, 2.5, -16.0, 0.058327817370275114253),
    (0.5, 2.5, -10.0, 0.089660067336301051675),
    (0.5, 2.5, -5.0, 0.16197919621431494803),
    (0.5, 2.5, -2.0, 0.31098074868730863854),
    (0.5, 2.5, -0.5, 0.56096057807454270545),
    (0.5, 2.5, 0.5, 1.1053672450784064506),
    (0.5, 2.5, 2.0, 12.710518256973368408),
    (0.5, 2.5, 5.0, 1152078389.1441531566),
    (0.7, 0.3, -100.0, -0.0026959890664088214981),
    (0.7, 0.3, -30.0, -0.0090547932616185963851),
    (0.7, 0.3, -20.0, -0.013641213267888994699),
    (0.7, 0.3, -16.0, -0.017095813888438651787),
    (0.7, 0.3, -10.0, -0.027459902858900977576),
    (0.7, 0.3, -5.0, -0.053574036259658449337),
    (0.7, 0.3, -2.0, -0.093300701466403963238),
    (0.7, 0.3, -0.5, 0.031698956534408421343),
    (0.7, 0.3, 0.5, 1.2467652809897917746),
    (0.7, 0.3, 2.0, 42.26713901552810553),
    (0.7, 0.3, 5.0, 152099.43328300013983),
    (0.7, 0.5, -100.0, -0.0017079741079361271964),
    (0.7, 0.5, -30.0, -0.0056042567453437508712),
    (0.7, 0.5, -20.0, -0.0082945194431597074199),
    (0.7, 0.5, -16.0, -0.010251254596731092224),
    (0.7, 0.5, -10.0, -0.015736128789346789579),
    (0.7, 0.5, -5.0, -0.026375845632765751098),
    (0.7, 0.5, -2.0, -0.014883236157535449374),
    (0.7, 0.5, -0.5, 0.21107437736522261913),
    (0.7, 0.5, 0.5, 1.485844893721835994),
    (0.7, 0.5, 2.0, 34.674733981524184476),
    (0.7, 0.5, 5.0, 96033.311234775223845),
    (0.7, 1.0, -100.0, 0.0033696874163059942732),
    (0.7, 1.0, -30.0, 0.011444251527526973394),
    (0.7, 1.0, -20.0, 0.01739569829160397999),
    (0.7, 1.0, -16.0, 0.021960535403289328539),
    (0.7, 1.0, -10.0, 0.036173265542309158149),
    (0.7, 1.0, -5.0, 0.077569357764769809981),
    (0.7, 1.0, -2.0, 0.21378672701529727534),
    (0.7, 1.0, -0.5, 0.60514759205956427271),
    (0.7, 1.0, 0.5, 1.8249850568512024814),
    (0.7, 1.0, 2.0, 20.966433131481956304),
    (0.7, 1.0, 5.0, 30419.819802049511246),
    (0.7, 1.5, -100.0, 0.0085785853242765847131),
    (0.7, 1.5, -30.0, 0.028504053349493670132),
    (0.7, 1.5, -20.0, 0.042648396330864478195),
    (0.7, 1.5, -16.0, 0.053202415875295715741),
    (0.7, 1.5, -10.0, 0.084543407706298473773),
    (0.7, 1.5, -5.0, 0.16503730435180126514),
    (0.7, 1.5, -2.0, 0.36722245880056833111),
    (0.7, 1.5, -0.5, 0.783700801790340871),
    (0.7, 1.5, 0.5, 1.7612328143349915156),
    (0.7, 1.5, 2.0, 12.414424420257593877),
    (0.7, 1.5, 5.0, 9635.745265367704523),
    (0.7, 2.0, -100.0, 0.011075182795717903647),
    (0.7, 2.0, -30.0, 0.036392067608973166485),
    (0.7, 2.0, -20.0, 0.054022893620845817243),
    (0.7, 2.0, -16.0, 0.066997330872281065934),
    (0.7, 2.0, -10.0, 0.10463763325108232624),
    (0.7, 2.0, -5.0, 0.19566393372518326075),
    (0.7, 2.0, -2.0, 0.39683827965104412231),
    (0.7, 2.0, -0.5, 0.74480740574892657237),
    (0.7, 2.0, 0.5, 1.4301054475122011595),
    (0.7, 2.0, 2.0, 7.1226180130809373867),
    (0.7, 2.0, 5.0, 3052.062874384239345),
    (0.7, 2.5, -100.0, 0.010632052174639038263),
    (0.7, 2.5, -30.0, 0.034638094392825002831),
    (0.7, 2.5, -20.0, 0.051113511741267016862),
    (0.7, 2.5, -16.0, 0.06311201457012374217),
    (0.7, 2.5, -10.0, 0.097329203476746717311),
    (0.7, 2.5, -5.0, 0.17662967825054686285),
    (0.7, 2.5, -2.0, 0.33749200618680355843),
    (0.7, 2.5, -0.5, 0.58522783214463167865),
    (0.7, 2.5, 0.5, 1.0169888903986896296),
    (0.7, 2.5, 2.0, 3.9300950735031117453),
    (0.7, 2.5, 5.0, 966.60217956947137383),
    (0.9, 0.3, -100.0, -0.0027481853442233490024),
    (0.9, 0.3, -30.0, -0.0095231523903317434554),
    (0.9, 0.3, -20.0, -0.014711736799611870558),
    (0.9, 0.3, -16.0, -0.018820330331750880652),
    (0.9, 0.3, -10.0, -0.032464370028408749045),
    (0.9, 0.3, -5.0, -0.079149673577254660555),
    (0.9, 0.3, -2.0, -0.18291656775406479587),
    (0.9, 0.3, -0.5, -0.023657932309857749099),
    (0.9, 0.3, 0.5, 1.1940159450981493593),
    (0.9, 0.3, 2.0, 16.601512318442229089),
    (0.9, 0.3, 5.0, 1534.928086272018851),
    (0.9, 0.5, -100.0, -0.0027165250428292934157),
    (0.9, 0.5, -30.0, -0.0093048372839245569211),
    (0.9, 0.5, -20.0, -0.014241829127028770965),
    (0.9, 0.5, -16.0, -0.018080962229763402393),
    (0.9, 0.5, -10.0, -0.030347874573228821712),
    (0.9, 0.5, -5.0, -0.066346276353700432664),
    (0.9, 0.5, -2.0, -0.10282482036797026215),
    (0.9, 0.5, -0.5, 0.17138027546767609391),
    (0.9, 0.5, 0.5, 1.4042134129976267293),
    (0.9, 0.5, 2.0, 14.252371471374127726),
    (0.9, 0.5, 5.0, 1073.4144961144845368),
    (0.9, 1.0, -100.0, 0.0010689724182870890385),
    (0.9, 1.0, -30.0, 0.003713707698459852111),
    (0.9, 1.0, -20.0, 0.0057495078161091125836),
    (0.9, 1.0, -16.0, 0.0073691725711018619316),
    (0.9, 1.0, -10.0, 0.012820606051102099938),
    (0.9, 1.0, -5.0, 0.034431324804098418323),
    (0.9, 1.0, -2.0, 0.16352830001693004278),
    (0.9, 1.0, -0.5, 0.603405498695860968),
    (0.9, 1.0, 0.5, 1.7043087220993991136),
    (0.9, 1.0, 2.0, 9.6049277845715006791),
    (0.9, 1.0, 5.0, 438.95181466448263359),
    (0.9, 1.5, -100.0, 0.0067383695242657011627),
    (0.9, 1.5, -30.0, 0.022648191613978798828),
    (0.9, 1.5, -20.0, 0.034180104731423816771),
    (0.9, 1.5, -16.0, 0.042925258140195692727),
    (0.9, 1.5, -10.0, 0.069683285835014126448),
    (0.9, 1.5, -5.0, 0.14474048044025213054),
    (0.9, 1.5, -2.0, 0.3622034658828121788),
    (0.9, 1.5, -0.5, 0.80490771603316952476),
    (0.9, 1.5, 0.5, 1.6427066600516884006),
    (0.9, 1.5, 2.0, 6.2615992099617152035),
    (0.9, 1.5, 5.0, 179.39495951167335588),
    (0.9, 2.0, -100.0, 0.010489349144902135677),
    (0.9, 2.0, -30.0, 0.034786623670755507868),
    (0.9, 2.0, -20.0, 0.051979946729880640936),
    (0.9, 2.0, -16.0, 0.064780217538510935093),
    (0.9, 2.0, -10.0, 0.10264335131060805751),
    (0.9, 2.0, -5.0, 0.19845803684071396074),
    (0.9, 2.0, -2.0, 0.41896056446508772408),
    (0.9, 2.0, -0.5, 0.77245380829774060969),
    (0.9, 2.0, 0.5, 1.3361123402319689468),
    (0.9, 2.0, 2.0, 3.8970442595563376858),
    (0.9, 2.0, 5.0, 73.199935805814627432),
    (0.9, 2.5, -100.0, 0.011114538406110739626),
    (0.9, 2.5, -30.0, 0.036443361812083181838),
    (0.9, 2.5, -20.0, 0.054010684737158897934),
    (0.9, 2.5, -16.0, 0.066895664557231357817),
    (0.9, 2.5, -10.0, 0.10403283007987223623),
    (0.9, 2.5, -5.0, 0.19165696482684436636),
    (0.9, 2.5, -2.0, 0.36715392847984843264),
    (0.9, 2.5, -0.5, 0.60932890522983668073),
    (0.9, 2.5, 0.5, 0.95252484648567772847),
    (0.9, 2.5, 2.0, 2.2993854233832959161),
    (0.9, 2.5, 5.0, 29.771557600198962325),
    (0.99, 0.3, -100.0, -0.0024292738369383771182),
    (0.99, 0.3, -30.0, -0.0084584336441756845693),
    (0.99, 0.3, -20.0, -0.013129762563055010694),
    (0.99, 0.3, -16.0, -0.016878292811938639401),
    (0.99, 0.3, -10.0, -0.030001875868728521322),
    (0.99, 0.3, -5.0, -0.088662160436080110975),
    (0.99, 0.3, -2.0, -0.23555109402916616916),
    (0.99, 0.3, -0.5, -0.046441172224842495934),
    (0.99, 0.3, 0.5, 1.1637298823490316175),
    (0.99, 0.3, 2.0, 12.427838822161037316),
    (0.99, 0.3, 5.0, 507.78498036862155048),
    (0.99, 0.5, -100.0, -0.0028613598827026585774),
    (0.99, 0.5, -30.0, -0.0099010539107213941509),
    (0.99, 0.5, -20.0, -0.015290190311382750855),
    (0.99, 0.5, -16.0, -0.019568301640458940753),
    (0.99, 0.5, -10.0, -0.034048884616643552421),
    (0.99, 0.5, -5.0, -0.086247133680177148428),
    (0.99, 0.5, -2.0, -0.15205607144621256563),
    (0.99, 0.5, -0.5, 0.15674403035296139628),
    (0.99, 0.5, 0.5, 1.3645304966745716803),
    (0.99, 0.5, 2.0, 10.831161032206256442),
    (0.99, 0.5, 5.0, 366.85580256272387234),
    (0.99, 1.0, -100.0, 0.00010261344540995124645),
    (0.99, 1.0, -30.0, 0.00035975605168217239754),
    (0.99, 1.0, -20.0, 0.00056162348367495294963),
    (0.99, 1.0, -16.0, 0.00072557143054449296143),
    (0.99, 1.0, -10.0, 0.0013478638060832084404),
    (0.99, 1.0, -5.0, 0.0097680921391741281708),
    (0.99, 1.0, -2.0, 0.13821728069806402839),
    (0.99, 1.0, -0.5, 0.60608995263141647798),
    (0.99, 1.0, 0.5, 1.6541261938718982692),
    (0.99, 1.0, 2.0, 7.5665119538014304347),
    (0.99, 1.0, 5.0, 162.71337643708984613),
    (0.99, 1.5, -100.0, 0.0057809276840072627139),
    (0.99, 1.5, -30.0, 0.019503890208246442267),
    (0.99, 1.5, -20.0, 0.029524535452213706143),
    (0.99, 1.5, -16.0, 0.037172166021681557358),
    (0.99, 1.5, -10.0, 0.060916666370287197475),
    (0.99, 1.5, -5.0, 0.13213070138365937865),
    (0.99, 1.5, -2.0, 0.36110700957553089781),
    (0.99, 1.5, -0.5, 0.8164673039037272192),
    (0.99, 1.5, 0.5, 1.5966532063000265304),
    (0.99, 1.5, 2.0, 5.0905428346671501117),
    (0.99, 1.5, 5.0, 72.07310857147435806),
    (0.99, 2.0, -100.0, 0.010055012336314437039),
    (0.99, 2.0, -30.0, 0.033499873468884080454),
    (0.99, 2.0, -20.0, 0.050230465932753007879),
    (0.99, 2.0, -16.0, 0.062768852304525474082),
    (0.99, 2.0, -10.0, 0.10032170157791219742),
    (0.99, 2.0, -5.0, 0.19867026192755766682),
    (0.99, 2.0, -2.0, 0.43090282343436372616),
    (0.99, 2.0, -0.5, 0.78547626239885755791),
    (0.99, 2.0, 0.5, 1.3010943556724058768),
    (0.99, 2.0, 2.0, 3.2521436301080330521),
    (0.99, 2.0, 5.0, 31.816413324357457372),
    (0.99, 2.5, -100.0, 0.011220242465595370091),
    (0.99, 2.5, -30.0, 0.036934863854517806234),
    (0.99, 2.5, -20.0, 0.054892185061766427381),
    (0.99, 2.5, -16.0, 0.068128782247683393369),
    (0.99, 2.5, -10.0, 0.10659147496915435711),
    (0.99, 2.5, -5.0, 0.19875317351704462167),
    (0.99, 2.5, -2.0, 0.38194455240290127045),
    (0.99, 2.5, -0.5, 0.61994292514633914387),
    (0.99, 2.5, 0.5, 0.92922602876255510464),
    (0.99, 2.5, 2.0, 1.9599692461011601151),
    (0.99, 2.5, 5.0, 13.95581216970479705),
    (1.0, 0.3, -100.0, -0.0023808034644504145353),
    (1.0, 0.3, -30.0, -0.0082873242123762391882),
    (1.0, 0.3, -20.0, -0.012861586640416350889),
    (1.0, 0.3, -16.0, -0.01653171393906580205),
    (1.0, 0.3, -10.0, -0.029447718839044709894),
    (1.0, 0.3, -5.0, -0.089656736416004641586),
    (1.0, 0.3, -2.0, -0.24200670059648507233),
    (1.0, 0.3, -0.5, -0.048844264520148082084),
    (1.0, 0.3, 0.5, 1.1602160423178525746),
    (1.0, 0.3, 2.0, 12.073439681538224959),
    (1.0, 0.3, 5.0, 457.91577130033143897),
    (1.0, 0.5, -100.0, -0.0028643587811196561477),
    (1.0, 0.5, -30.0, -0.0099179168206186878169),
    (1.0, 0.5, -20.0, -0.015325407164895395749),
    (1.0, 0.5, -16.0, -0.019624776052854846113),
    (1.0, 0.5, -10.0, -0.03427543110755518105),
    (1.0, 0.5, -5.0, -0.088606475886827649911),
    (1.0, 0.5, -2.0, -0.15795962698142063189),
    (1.0, 0.5, -0.5, 0.15527712659616933968),
    (1.0, 0.5, 0.5, 1.360084006368273076),
    (1.0, 0.5, 2.0, 10.538428671807382812),
    (1.0, 0.5, 5.0, 331.90660470521432209),
    (1.0, 1.0, -100.0, -1.4970499850425531781e-19),
    (1.0, 1.0, -30.0, 9.3576229688401746049e-14),
    (1.0, 1.0, -20.0, 2.061153622438557828e-9),
    (1.0, 1.0, -16.0, 1.1253517471925911451e-7),
    (1.0, 1.0, -10.0, 0.000045399929762484851536),
    (1.0, 1.0, -5.0, 0.0067379469990854670966),
    (1.0, 1.0, -2.0, 0.13533528323661269189),
    (1.0, 1.0, -0.5, 0.6065306597126334236),
    (1.0, 1.0, 0.5, 1.6487212707001281468),
    (1.0, 1.0, 2.0, 7.3890560989306502272),
    (1.0, 1.0, 5.0, 148.41315910257660342),
    (1.0, 1.5, -100.0, 0.0056705394232887594258),
    (1.0, 1.5, -30.0, 0.019136916678945832492),
    (1.0, 1.5, -20.0, 0.028975749535632584135),
    (1.0, 1.5, -16.0, 0.036488397475038195816),
    (1.0, 1.5, -10.0, 0.0598465014655311468),
    (1.0, 1.5, -5.0, 0.13055921188691678737),
    (1.0, 1.5, -2.0, 0.36107460526458845942),
    (1.0, 1.5, -0.5, 0.81782491390317389453),
    (1.0, 1.5, 0.5, 1.5917888456410335782),
    (1.0, 1.5, 2.0, 4.9871195441298132627),
    (1.0, 1.5, 5.0, 66.268483024333313161),
    (1.0, 2.0, -100.0, 0.0099999999999999999982),
    (1.0, 2.0, -30.0, 0.033333333333330214126),
    (1.0, 2.0, -20.0, 0.049999999896942318878),
    (1.0, 2.0, -16.0, 0.062499992966551580046),
    (1.0, 2.0, -10.0, 0.099995460007023751515),
    (1.0, 2.0, -5.0, 0.19865241060018290658),
    (1.0, 2.0, -2.0, 0.43233235838169365405),
    (1.0, 2.0, -0.5, 0.78693868057473315279),
    (1.0, 2.0, 0.5, 1.2974425414002562937),
    (1.0, 2.0, 2.0, 3.1945280494653251136),
    (1.0, 2.0, 5.0, 29.482631820515320684),
    (1.0, 2.5, -100.0, 0.011227086276722238145),
    (1.0, 2.5, -30.0, 0.036974741680552224713),
    (1.0, 2.5, -20.0, 0.054970170877993999488),
    (1.0, 2.5, -16.0, 0.06824317310127964863),
    (1.0, 2.5, -10.0, 0.10685326656299814271),
    (1.0, 2.5, -5.0, 0.1995639910417191573),
    (1.0, 2.5, -2.0, 0.38365228091546205724),
    (1.0, 2.5, -0.5, 0.62110850638467735874),
    (1.0, 2.5, 0.5, 0.92681935709104200852),
    (1.0, 2.5, 2.0, 1.9293701885171503444),
    (1.0, 2.5, 5.0, 13.028020771447560118),
];
