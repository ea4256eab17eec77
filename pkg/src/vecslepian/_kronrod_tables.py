"""Gauss-Kronrod nodes and weights on [-1, 1].

Generated by tools/gen_kronrod.py (mpmath, 60 digits).  Each table maps
the Kronrod point count to rows of (node, gauss_weight, kronrod_weight);
gauss_weight is zero on the Kronrod-only nodes.
"""

TABLES = {
    15: (
        (-0.9914553711208126392068547, 0.0, 0.02293532201052922496373201),
        (-0.9491079123427585245261897, 0.1294849661688696932706114, 0.06309209262997855329070066),
        (-0.8648644233597690727897128, 0.0, 0.1047900103222501838398763),
        (-0.7415311855993944398638648, 0.2797053914892766679014678, 0.1406532597155259187451896),
        (-0.5860872354676911302941448, 0.0, 0.1690047266392679028265834),
        (-0.4058451513773971669066064, 0.3818300505051189449503698, 0.1903505780647854099132564),
        (-0.2077849550078984676006894, 0.0, 0.2044329400752988924141620),
        (0.0, 0.4179591836734693877551020, 0.2094821410847278280129992),
        (0.2077849550078984676006894, 0.0, 0.2044329400752988924141620),
        (0.4058451513773971669066064, 0.3818300505051189449503698, 0.1903505780647854099132564),
        (0.5860872354676911302941448, 0.0, 0.1690047266392679028265834),
        (0.7415311855993944398638648, 0.2797053914892766679014678, 0.1406532597155259187451896),
        (0.8648644233597690727897128, 0.0, 0.1047900103222501838398763),
        (0.9491079123427585245261897, 0.1294849661688696932706114, 0.06309209262997855329070066),
        (0.9914553711208126392068547, 0.0, 0.02293532201052922496373201),
    ),
    21: (
        (-0.9956571630258080807355273, 0.0, 0.01169463886737187427806440),
        (-0.9739065285171717200779640, 0.06667134430868813759356881, 0.03255816230796472747881897),
        (-0.9301574913557082260012072, 0.0, 0.05475589657435199603138130),
        (-0.8650633666889845107320967, 0.1494513491505805931457763, 0.07503967481091995276704314),
        (-0.7808177265864168970637176, 0.0, 0.09312545458369760553506547),
        (-0.6794095682990244062343274, 0.2190863625159820439955349, 0.1093871588022976418992106),
        (-0.5627571346686046833390001, 0.0, 0.1234919762620658510779581),
        (-0.4333953941292471907992659, 0.2692667193099963550912269, 0.1347092173114733259280540),
        (-0.2943928627014601981311266, 0.0, 0.1427759385770600807970943),
        (-0.1488743389816312108848260, 0.2955242247147528701738930, 0.1477391049013384913748415),
        (0.0, 0.0, 0.1494455540029169056649365),
        (0.1488743389816312108848260, 0.2955242247147528701738930, 0.1477391049013384913748415),
        (0.2943928627014601981311266, 0.0, 0.1427759385770600807970943),
        (0.4333953941292471907992659, 0.2692667193099963550912269, 0.1347092173114733259280540),
        (0.5627571346686046833390001, 0.0, 0.1234919762620658510779581),
        (0.6794095682990244062343274, 0.2190863625159820439955349, 0.1093871588022976418992106),
        (0.7808177265864168970637176, 0.0, 0.09312545458369760553506547),
        (0.8650633666889845107320967, 0.1494513491505805931457763, 0.07503967481091995276704314),
        (0.9301574913557082260012072, 0.0, 0.05475589657435199603138130),
        (0.9739065285171717200779640, 0.06667134430868813759356881, 0.03255816230796472747881897),
        (0.9956571630258080807355273, 0.0, 0.01169463886737187427806440),
    ),
    31: (
        (-0.9980022986933970602851728, 0.0, 0.005377479872923348987792051),
        (-0.9879925180204854284895657, 0.03075324199611726835462839, 0.01500794732931612253837476),
        (-0.9677390756791391342573480, 0.0, 0.02546084732671532018687400),
        (-0.9372733924007059043077589, 0.07036604748810812470926742, 0.03534636079137584622203795),
        (-0.8972645323440819008825097, 0.0, 0.04458975132476487660822730),
        (-0.8482065834104272162006483, 0.1071592204671719350118695, 0.05348152469092808726534315),
        (-0.7904185014424659329676493, 0.0, 0.06200956780067064028513923),
        (-0.7244177313601700474161861, 0.1395706779261543144478048, 0.06985412131872825870952008),
        (-0.6509967412974169705337359, 0.0, 0.07684968075772037889443278),
        (-0.5709721726085388475372267, 0.1662692058169939335532009, 0.08308050282313302103828925),
        (-0.4850818636402396806936557, 0.0, 0.08856444305621177064727544),
        (-0.3941513470775633698972074, 0.1861610000155622110268006, 0.09312659817082532122548687),
        (-0.2991800071531688121667800, 0.0, 0.09664272698362367850517991),
        (-0.2011940939974345223006283, 0.1984314853271115764561183, 0.09917359872179195933239317),
        (-0.1011420669187174990270742, 0.0, 0.1007698455238755950449467),
        (1.210184973390411960255635e-122, 0.2025782419255612728806202, 0.1013300070147915490173748),
        (0.1011420669187174990270742, 0.0, 0.1007698455238755950449467),
        (0.2011940939974345223006283, 0.1984314853271115764561183, 0.09917359872179195933239317),
        (0.2991800071531688121667800, 0.0, 0.09664272698362367850517991),
        (0.3941513470775633698972074, 0.1861610000155622110268006, 0.09312659817082532122548687),
        (0.4850818636402396806936557, 0.0, 0.08856444305621177064727544),
        (0.5709721726085388475372267, 0.1662692058169939335532009, 0.08308050282313302103828925),
        (0.6509967412974169705337359, 0.0, 0.07684968075772037889443278),
        (0.7244177313601700474161861, 0.1395706779261543144478048, 0.06985412131872825870952008),
        (0.7904185014424659329676493, 0.0, 0.06200956780067064028513923),
        (0.8482065834104272162006483, 0.1071592204671719350118695, 0.05348152469092808726534315),
        (0.8972645323440819008825097, 0.0, 0.04458975132476487660822730),
        (0.9372733924007059043077589, 0.07036604748810812470926742, 0.03534636079137584622203795),
        (0.9677390756791391342573480, 0.0, 0.02546084732671532018687400),
        (0.9879925180204854284895657, 0.03075324199611726835462839, 0.01500794732931612253837476),
        (0.9980022986933970602851728, 0.0, 0.005377479872923348987792051),
    ),
    41: (
        (-0.9988590315882776638383156, 0.0, 0.003073583718520531501218293),
        (-0.9931285991850949247861224, 0.01761400713915211831186196, 0.008600269855642942198661788),
        (-0.9815078774502502591933430, 0.0, 0.01462616925697125298378796),
        (-0.9639719272779137912676661, 0.04060142980038694133103995, 0.02038837346126652359801023),
        (-0.9408226338317547535199827, 0.0, 0.02588213360495115883450507),
        (-0.9122344282513259058677524, 0.06267204833410906356950654, 0.03128730677703279895854312),
        (-0.8782768112522819760774430, 0.0, 0.03660016975820079803055724),
        (-0.8391169718222188233945291, 0.08327674157670474872475814, 0.04166887332797368626378831),
        (-0.7950414288375511983506388, 0.0, 0.04643482186749767472023188),
        (-0.7463319064601507926143051, 0.1019301198172404350367501, 0.05094457392372869193270767),
        (-0.6932376563347513848054907, 0.0, 0.05519510534828599474483237),
        (-0.6360536807265150254528367, 0.1181945319615184173123774, 0.05911140088063957237496722),
        (-0.5751404468197103153429460, 0.0, 0.06265323755478116802587012),
        (-0.5108670019508270980043641, 0.1316886384491766268984945, 0.06583459713361842211156356),
        (-0.4435931752387251031999922, 0.0, 0.06864867292852161934562341),
        (-0.3737060887154195606725482, 0.1420961093183820513292983, 0.07105442355344406830579036),
        (-0.3016278681149130043205554, 0.0, 0.07303069033278666749518942),
        (-0.2277858511416450780804962, 0.1491729864726037467878287, 0.07458287540049918898658142),
        (-0.1526054652409226755052202, 0.0, 0.07570449768455667465954278),
        (-0.07652652113349733375464041, 0.1527533871307258506980843, 0.07637786767208073670550284),
        (0.0, 0.0, 0.07660071191799965644504990),
        (0.07652652113349733375464041, 0.1527533871307258506980843, 0.07637786767208073670550284),
        (0.1526054652409226755052202, 0.0, 0.07570449768455667465954278),
        (0.2277858511416450780804962, 0.1491729864726037467878287, 0.07458287540049918898658142),
        (0.3016278681149130043205554, 0.0, 0.07303069033278666749518942),
        (0.3737060887154195606725482, 0.1420961093183820513292983, 0.07105442355344406830579036),
        (0.4435931752387251031999922, 0.0, 0.06864867292852161934562341),
        (0.5108670019508270980043641, 0.1316886384491766268984945, 0.06583459713361842211156356),
        (0.5751404468197103153429460, 0.0, 0.06265323755478116802587012),
        (0.6360536807265150254528367, 0.1181945319615184173123774, 0.05911140088063957237496722),
        (0.6932376563347513848054907, 0.0, 0.05519510534828599474483237),
        (0.7463319064601507926143051, 0.1019301198172404350367501, 0.05094457392372869193270767),
        (0.7950414288375511983506388, 0.0, 0.04643482186749767472023188),
        (0.8391169718222188233945291, 0.08327674157670474872475814, 0.04166887332797368626378831),
        (0.8782768112522819760774430, 0.0, 0.03660016975820079803055724),
        (0.9122344282513259058677524, 0.06267204833410906356950654, 0.03128730677703279895854312),
        (0.9408226338317547535199827, 0.0, 0.02588213360495115883450507),
        (0.9639719272779137912676661, 0.04060142980038694133103995, 0.02038837346126652359801023),
        (0.9815078774502502591933430, 0.0, 0.01462616925697125298378796),
        (0.9931285991850949247861224, 0.01761400713915211831186196, 0.008600269855642942198661788),
        (0.9988590315882776638383156, 0.0, 0.003073583718520531501218293),
    ),
    51: (
        (-0.9992621049926098341934575, 0.0, 0.001987383892330315926507852),
        (-0.9955569697904980979087849, 0.01139379850102628794790296, 0.005561932135356713758040237),
        (-0.9880357945340772476373310, 0.0, 0.009473973386174151607207711),
        (-0.9766639214595175114983154, 0.02635498661503213726190182, 0.01323622919557167481365641),
        (-0.9616149864258425124181300, 0.0, 0.01684781770912829823151667),
        (-0.9429745712289743394140112, 0.04093915670130631265562349, 0.02043537114588283545656829),
        (-0.9207471152817015617463461, 0.0, 0.02400994560695321622009249),
        (-0.8949919978782753688510420, 0.05490469597583519192593689, 0.02747531758785173780294846),
        (-0.8658470652932755954489970, 0.0, 0.03079230016738748889110902),
        (-0.8334426287608340014210211, 0.06803833381235691720718719, 0.03400213027432933783674880),
        (-0.7978737979985000594104109, 0.0, 0.03711627148341554356033063),
        (-0.7592592630373576305772829, 0.08014070033500101801323496, 0.04008382550403238207483928),
        (-0.7177664068130843881866541, 0.0, 0.04287284502017004947689579),
        (-0.6735663684734683644851206, 0.09102826198296364981149722, 0.04550291304992178890987058),
        (-0.6268100990103174127881227, 0.0, 0.04798253713883671390639226),
        (-0.5776629302412229677236898, 0.1005359490670506442022069, 0.05027767908071567196332526),
        (-0.5263252843347191825996238, 0.0, 0.05236288580640747586436671),
        (-0.4730027314457149605221821, 0.1085196244742636531160940, 0.05425112988854549014454337),
        (-0.4178853821930377488518144, 0.0, 0.05595081122041231730824069),
        (-0.3611723058093878377358217, 0.1148582591457116483393255, 0.05743711636156783285358269),
        (-0.3030895389311078301674789, 0.0, 0.05868968002239420796197418),
        (-0.2438668837209884320451904, 0.1194557635357847722281781, 0.05972034032417405997909929),
        (-0.1837189394210488920159699, 0.0, 0.06053945537604586294536027),
        (-0.1228646926107103963873598, 0.1222424429903100416889595, 0.06112850971705304830585903),
        (-0.06154448300568507888654639, 0.0, 0.06147118987142531666154413),
        (6.050924866952059801278173e-123, 0.1231760537267154512039029, 0.06158081806783293507875982),
        (0.06154448300568507888654639, 0.0, 0.06147118987142531666154413),
        (0.1228646926107103963873598, 0.1222424429903100416889595, 0.06112850971705304830585903),
        (0.1837189394210488920159699, 0.0, 0.06053945537604586294536027),
        (0.2438668837209884320451904, 0.1194557635357847722281781, 0.05972034032417405997909929),
        (0.3030895389311078301674789, 0.0, 0.05868968002239420796197418),
        (0.3611723058093878377358217, 0.1148582591457116483393255, 0.05743711636156783285358269),
        (0.4178853821930377488518144, 0.0, 0.05595081122041231730824069),
        (0.4730027314457149605221821, 0.1085196244742636531160940, 0.05425112988854549014454337),
        (0.5263252843347191825996238, 0.0, 0.05236288580640747586436671),
        (0.5776629302412229677236898, 0.1005359490670506442022069, 0.05027767908071567196332526),
        (0.6268100990103174127881227, 0.0, 0.04798253713883671390639226),
        (0.6735663684734683644851206, 0.09102826198296364981149722, 0.04550291304992178890987058),
        (0.7177664068130843881866541, 0.0, 0.04287284502017004947689579),
        (0.7592592630373576305772829, 0.08014070033500101801323496, 0.04008382550403238207483928),
        (0.7978737979985000594104109, 0.0, 0.03711627148341554356033063),
        (0.8334426287608340014210211, 0.06803833381235691720718719, 0.03400213027432933783674880),
        (0.8658470652932755954489970, 0.0, 0.03079230016738748889110902),
        (0.8949919978782753688510420, 0.05490469597583519192593689, 0.02747531758785173780294846),
        (0.9207471152817015617463461, 0.0, 0.02400994560695321622009249),
        (0.9429745712289743394140112, 0.04093915670130631265562349, 0.02043537114588283545656829),
        (0.9616149864258425124181300, 0.0, 0.01684781770912829823151667),
        (0.9766639214595175114983154, 0.02635498661503213726190182, 0.01323622919557167481365641),
        (0.9880357945340772476373310, 0.0, 0.009473973386174151607207711),
        (0.9955569697904980979087849, 0.01139379850102628794790296, 0.005561932135356713758040237),
        (0.9992621049926098341934575, 0.0, 0.001987383892330315926507852),
    ),
    61: (
        (-0.9994844100504906375713259, 0.0, 0.001389013698677007624551591),
        (-0.9968934840746495402716301, 0.007968192496166605615465883, 0.003890461127099884051267202),
        (-0.9916309968704045948586284, 0.0, 0.006630703915931292173319826),
        (-0.9836681232797472099700326, 0.01846646831109095914230213, 0.009273279659517763428441147),
        (-0.9731163225011262683746939, 0.0, 0.01182301525349634174223290),
        (-0.9600218649683075122168710, 0.02878470788332336934971918, 0.01436972950704580481245143),
        (-0.9443744447485599794158313, 0.0, 0.01692088918905327262757229),
        (-0.9262000474292743258793243, 0.03879919256962704959680194, 0.01941414119394238117340895),
        (-0.9055733076999077985465226, 0.0, 0.02182803582160919229716749),
        (-0.8825605357920526815431165, 0.04840267283059405290293814, 0.02419116207808060136568637),
        (-0.8572052335460610989586585, 0.0, 0.02650995488233310161060171),
        (-0.8295657623827683974428981, 0.05749315621761906648172169, 0.02875404876504129284397879),
        (-0.7997278358218390830136689, 0.0, 0.03090725756238776247288425),
        (-0.7677774321048261949179773, 0.06597422988218049512812852, 0.03298144705748372603181419),
        (-0.7337900624532268047261711, 0.0, 0.03497933802806002413749967),
        (-0.6978504947933157969322924, 0.07375597473770520626824385, 0.03688236465182122922391107),
        (-0.6600610641266269613700537, 0.0, 0.03867894562472759295034865),
        (-0.6205261829892428611404776, 0.08075589522942021535469494, 0.04037453895153595911199528),
        (-0.5793452358263616917560249, 0.0, 0.04196981021516424614714754),
        (-0.5366241481420198992641698, 0.08689978720108297980238753, 0.04345253970135606931683173),
        (-0.4924804678617785749936931, 0.0, 0.04481480013316266319235555),
        (-0.4470337695380891767806099, 0.09212252223778612871763271, 0.04605923827100698811627174),
        (-0.4004012548303943925354762, 0.0, 0.04718554656929915394526148),
        (-0.3527047255308781134710372, 0.09636873717464425963946863, 0.04818586175708712914077949),
        (-0.3040732022736250773726771, 0.0, 0.04905543455502977888752817),
        (-0.2546369261678898464398051, 0.09959342058679526706278028, 0.04979568342707420635781157),
        (-0.2045251166823098914389577, 0.0, 0.05040592140278234684089309),
        (-0.1538699136085835469637947, 0.1017623897484055045964290, 0.05088179589874960649229747),
        (-0.1028069379667370301470968, 0.0, 0.05122154784925877217065628),
        (-0.05147184255531769583302521, 0.1028526528935588403412856, 0.05142612853745902593386288),
        (0.0, 0.0, 0.05149472942945156755834043),
        (0.05147184255531769583302521, 0.1028526528935588403412856, 0.05142612853745902593386288),
        (0.1028069379667370301470968, 0.0, 0.05122154784925877217065628),
        (0.1538699136085835469637947, 0.1017623897484055045964290, 0.05088179589874960649229747),
        (0.2045251166823098914389577, 0.0, 0.05040592140278234684089309),
        (0.2546369261678898464398051, 0.09959342058679526706278028, 0.04979568342707420635781157),
        (0.3040732022736250773726771, 0.0, 0.04905543455502977888752817),
        (0.3527047255308781134710372, 0.09636873717464425963946863, 0.04818586175708712914077949),
        (0.4004012548303943925354762, 0.0, 0.04718554656929915394526148),
        (0.4470337695380891767806099, 0.09212252223778612871763271, 0.04605923827100698811627174),
        (0.4924804678617785749936931, 0.0, 0.04481480013316266319235555),
        (0.5366241481420198992641698, 0.08689978720108297980238753, 0.04345253970135606931683173),
        (0.5793452358263616917560249, 0.0, 0.04196981021516424614714754),
        (0.6205261829892428611404776, 0.08075589522942021535469494, 0.04037453895153595911199528),
        (0.6600610641266269613700537, 0.0, 0.03867894562472759295034865),
        (0.6978504947933157969322924, 0.07375597473770520626824385, 0.03688236465182122922391107),
        (0.7337900624532268047261711, 0.0, 0.03497933802806002413749967),
        (0.7677774321048261949179773, 0.06597422988218049512812852, 0.03298144705748372603181419),
        (0.7997278358218390830136689, 0.0, 0.03090725756238776247288425),
        (0.8295657623827683974428981, 0.05749315621761906648172169, 0.02875404876504129284397879),
        (0.8572052335460610989586585, 0.0, 0.02650995488233310161060171),
        (0.8825605357920526815431165, 0.04840267283059405290293814, 0.02419116207808060136568637),
        (0.9055733076999077985465226, 0.0, 0.02182803582160919229716749),
        (0.9262000474292743258793243, 0.03879919256962704959680194, 0.01941414119394238117340895),
        (0.9443744447485599794158313, 0.0, 0.01692088918905327262757229),
        (0.9600218649683075122168710, 0.02878470788332336934971918, 0.01436972950704580481245143),
        (0.9731163225011262683746939, 0.0, 0.01182301525349634174223290),
        (0.9836681232797472099700326, 0.01846646831109095914230213, 0.009273279659517763428441147),
        (0.9916309968704045948586284, 0.0, 0.006630703915931292173319826),
        (0.9968934840746495402716301, 0.007968192496166605615465883, 0.003890461127099884051267202),
        (0.9994844100504906375713259, 0.0, 0.001389013698677007624551591),
    ),
}
